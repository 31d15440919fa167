#pragma once

#include "pibound/enclosure.hpp"
#include "pibound/products.hpp"
#include "pibound/primes.hpp"
#include "pibound/rational.hpp"
#include "pibound/zeta.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pibound {

// Irrationality measure mu plus the working margin eps, both exact
// rationals. mu is 1 (rational targets) or >= 2 (irrational targets).
// eps >= 0 is accepted at the type level; the chain verdicts insist on
// eps > 0, since the measure inequality only promises finitely many
// exceptions for a strictly positive margin.
struct IrrationalityParams {
  Rational mu = 2;
  Rational eps = Rational(1, 10);

  Rational exponent() const { return mu + eps; }
  // Throws std::invalid_argument when mu is not in {1} union [2, inf) or
  // eps < 0.
  void validate() const;
};

// 1/((s-1) x^(s-1)): integral bound for the tail sum_{n>x} n^-s. s >= 2.
Rational euler_tail_bound(unsigned s, std::uint64_t x);

// 2/((2s-1) x^(2s-1)): leading term of the tail over p > x of 2/p^2s.
Rational ratio_tail_bound(unsigned s, std::uint64_t x);

// Rational lower bound of 1/q^(mu+eps), by integer-root bracketing of the
// fractional power. exact marks the cases where the value is hit, not just
// bounded (integer exponent, or the root comes out whole).
struct MeasureGap {
  Rational value;
  bool exact = false;
};
MeasureGap measure_gap(const Int& q, const IrrationalityParams& params);

// Outcome of one inequality check lhs <= rhs, endpoints kept as exact
// intervals (exact rationals appear as width-zero intervals).
struct DiffReport {
  Verdict verdict = Verdict::indeterminate;
  RationalInterval lhs;
  RationalInterval rhs;
  Rational slack = 0;   // rhs.lo - lhs.hi, the certain margin
  Rational min_c4 = 0;  // ratio check only: x * |2/5 - p_x/q_x|
};

// |1/zeta(s) - p_x/q_x| <= 1/((s-1) zeta(s) x^(s-1)), s >= 2, via interval
// arithmetic on a terms-term zeta enclosure. Indeterminate means the
// intervals overlap; retry with more terms.
DiffReport verify_diff_euler(unsigned s, std::uint64_t x, std::uint64_t terms,
                             const PrimeTable& table);

// |2/5 - p_x/q_x| <= c4/x, decided exactly. min_c4 reports the smallest
// admissible c4 at this x.
DiffReport verify_diff_ratio(std::uint64_t x, const Rational& c4,
                             const PrimeTable& table);

// Enclosure of the bound (s-1)/((mu+eps) ln 2) * ln x + s + 1
// + ln((s-1) zeta(s)) / ((mu+eps) ln 2). zeta_s must enclose zeta(s).
RationalInterval pi_lower_bound_euler(unsigned s, std::uint64_t x,
                                      const IrrationalityParams& params,
                                      const RationalInterval& zeta_s);

// Enclosure of 1/((mu+eps) ln 2) * ln x + 2 - ln c4 / ((mu+eps) ln 2).
// The additive offset 2 is the s + 1 of the euler form at the fixed s = 1
// carried by the ratio product.
RationalInterval pi_lower_bound_ratio(std::uint64_t x,
                                      const IrrationalityParams& params,
                                      const Rational& c4);

// pi(x) >= bound is equivalent, after exponentiating base 2 and clearing
// the rational exponent a/b = mu+eps, to
//   2^((pi(x)-s-1) a)  >=  ((s-1) zeta(s) x^(s-1))^b,
// which is decided exactly against the zeta enclosure's endpoints. The
// ratio form replaces the right side with (x/c4)^b and never returns
// indeterminate.
Verdict theorem_check_euler(unsigned s, std::uint64_t x, std::uint64_t pi_x,
                            const IrrationalityParams& params,
                            const RationalInterval& zeta_s);
Verdict theorem_check_ratio(std::uint64_t x, std::uint64_t pi_x,
                            const IrrationalityParams& params,
                            const Rational& c4);

struct BoundLink {
  std::string name;
  Verdict verdict = Verdict::indeterminate;
  RationalInterval lhs;
  RationalInterval rhs;
  Rational slack = 0;  // rhs.lo - lhs.hi
  std::string note;
};

struct BoundReport {
  ProductKind chain = ProductKind::euler;
  unsigned s = 2;
  std::uint64_t x = 0;
  std::uint64_t pi_x = 0;
  IrrationalityParams params;
  Rational c4 = 1;      // ratio chain only
  Rational safety = 2;  // ratio tail inflation factor
  std::uint64_t terms = 0;
  std::vector<BoundLink> links;
  RationalInterval bound;  // enclosure of c1 log x + c0
  Verdict theorem = Verdict::indeterminate;

  bool all_links_hold() const;
};

struct ChainOptions {
  IrrationalityParams params;
  std::uint64_t terms = 0;  // 0: pick the count for enclosure width 1e-8
  Rational c4 = 1;
  Rational safety = 2;
};

// Evaluates every link of one chain at (s, x) independently: growth of the
// reduced denominator, the measure gap ordering, the tail/difference bound,
// and the final count bound. Failures are reported, never thrown.
BoundReport verify_chain_euler(unsigned s, std::uint64_t x,
                               const ChainOptions& opt, const PrimeTable& table);
// Same, with a caller-supplied zeta(s) enclosure (reused across many x).
// opt.terms is recorded as given.
BoundReport verify_chain_euler(unsigned s, std::uint64_t x,
                               const ChainOptions& opt, const PrimeTable& table,
                               const RationalInterval& zeta_s);
BoundReport verify_chain_ratio(std::uint64_t x, const ChainOptions& opt,
                               const PrimeTable& table);
BoundReport verify_chain(ProductKind chain, unsigned s, std::uint64_t x,
                         const ChainOptions& opt, const PrimeTable& table);

// Exhaustive theorem check over every integer x in [2, x_max]. Exploits the
// fact that pi(x) is constant between primes while the right side grows, so
// whole blocks are cleared by one comparison at the block end.
struct TheoremScan {
  std::vector<std::uint64_t> violations;     // x failing the exact check
  std::vector<std::uint64_t> indeterminate;  // zeta enclosure too wide
  std::uint64_t first_safe_x = 2;            // first x past every violation

  bool clean_from(std::uint64_t x) const { return first_safe_x <= x; }
};

TheoremScan theorem_scan_euler(unsigned s, std::uint64_t x_max,
                               const IrrationalityParams& params,
                               const RationalInterval& zeta_s,
                               const PrimeTable& table);
TheoremScan theorem_scan_ratio(std::uint64_t x_max,
                               const IrrationalityParams& params,
                               const Rational& c4, const PrimeTable& table);

}  // namespace pibound
