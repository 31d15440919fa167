#include "pibound/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace pibound {

void IrrationalityParams::validate() const {
  if (!(mu == 1 || mu >= 2))
    throw std::invalid_argument("irrationality measure must be 1 or >= 2");
  if (eps < 0) throw std::invalid_argument("eps must be >= 0");
}

Rational euler_tail_bound(unsigned s, std::uint64_t x) {
  if (s < 2) throw std::invalid_argument("tail bound requires s >= 2");
  if (x < 1) throw std::invalid_argument("tail bound requires x >= 1");
  Int den = Int(s - 1) * pow_int(Int(static_cast<unsigned long>(x)), s - 1);
  return make_rational(1, den);
}

Rational ratio_tail_bound(unsigned s, std::uint64_t x) {
  if (s < 1) throw std::invalid_argument("tail bound requires s >= 1");
  if (x < 1) throw std::invalid_argument("tail bound requires x >= 1");
  Int den = Int(2 * s - 1) * pow_int(Int(static_cast<unsigned long>(x)), 2 * s - 1);
  return make_rational(2, den);
}

MeasureGap measure_gap(const Int& q, const IrrationalityParams& params) {
  params.validate();
  if (q < 1) throw std::invalid_argument("measure gap requires q >= 1");
  if (q == 1) return {Rational(1), true};
  Rational e = params.exponent();
  const Int& a = e.get_num();
  const Int& b = e.get_den();
  if (!a.fits_ulong_p()) throw std::invalid_argument("measure exponent too large");
  unsigned long au = a.get_ui();
  if (b == 1) return {make_rational(1, pow_int(q, au)), true};
  if (b <= 64) {
    // q^(a/b) lies in [r, r+1) with r = floor((q^a)^(1/b)), so 1/(r+1) is a
    // strict lower bound of 1/q^(a/b) unless the root is exact.
    Int qa = pow_int(q, au);
    Int root;
    int exact = mpz_root(root.get_mpz_t(), qa.get_mpz_t(), b.get_ui());
    if (exact) return {make_rational(1, root), true};
    return {make_rational(1, root + 1), false};
  }
  // Fall back to rounding the exponent up; q >= 1 keeps the direction.
  Int ce;
  mpz_cdiv_q(ce.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {make_rational(1, pow_int(q, ce.get_ui())), false};
}

namespace {

struct ExpParts {
  unsigned long a;
  unsigned long b;
};

// mu + eps as a cleared fraction a/b; chains need a strictly positive eps.
ExpParts chain_exponent(const IrrationalityParams& params) {
  params.validate();
  if (params.eps <= 0)
    throw std::invalid_argument("chain verification requires eps > 0");
  Rational e = params.exponent();
  if (!e.get_num().fits_ulong_p() || !e.get_den().fits_ulong_p())
    throw std::invalid_argument("measure exponent too large");
  return {e.get_num().get_ui(), e.get_den().get_ui()};
}

long ceil_div(long k, long b) {
  return k >= 0 ? (k + b - 1) / b : k / b;
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

}  // namespace

DiffReport verify_diff_euler(unsigned s, std::uint64_t x, std::uint64_t terms,
                             const PrimeTable& table) {
  ProductRecord rec = euler_partial(s, x, table);
  RationalInterval zint = zeta_interval(s, terms);
  RationalInterval inv_z = reciprocal(zint);
  DiffReport r;
  r.lhs = interval_abs(inv_z - RationalInterval(rec.fraction));
  r.rhs = euler_tail_bound(s, x) * inv_z;
  r.verdict = interval_leq(r.lhs, r.rhs);
  r.slack = r.rhs.lo - r.lhs.hi;
  return r;
}

DiffReport verify_diff_ratio(std::uint64_t x, const Rational& c4,
                             const PrimeTable& table) {
  if (c4 <= 0) throw std::invalid_argument("c4 must be positive");
  if (x < 1) throw std::invalid_argument("x must be >= 1");
  ProductRecord rec = ratio_partial(1, x, table);
  Rational diff = abs(Rational(2, 5) - rec.fraction);
  Rational rhs = c4 / Rational(static_cast<unsigned long>(x));
  DiffReport r;
  r.lhs = RationalInterval(diff);
  r.rhs = RationalInterval(rhs);
  r.verdict = diff <= rhs ? Verdict::holds : Verdict::fails;
  r.slack = rhs - diff;
  r.min_c4 = diff * Rational(static_cast<unsigned long>(x));
  return r;
}

RationalInterval pi_lower_bound_euler(unsigned s, std::uint64_t x,
                                      const IrrationalityParams& params,
                                      const RationalInterval& zeta_s) {
  if (s < 2) throw std::invalid_argument("euler bound requires s >= 2");
  if (x < 1) throw std::invalid_argument("euler bound requires x >= 1");
  if (zeta_s.lo <= 0) throw std::invalid_argument("zeta enclosure must be positive");
  chain_exponent(params);  // validation only
  RationalInterval ln_x = log_enclosure(Rational(static_cast<unsigned long>(x)));
  RationalInterval ln_z = log_enclosure(Rational(s - 1) * zeta_s);
  RationalInterval denom = params.exponent() * log2_enclosure();
  RationalInterval num = Rational(s - 1) * ln_x + ln_z;
  return Rational(s + 1) + num * reciprocal(denom);
}

RationalInterval pi_lower_bound_ratio(std::uint64_t x,
                                      const IrrationalityParams& params,
                                      const Rational& c4) {
  if (x < 1) throw std::invalid_argument("ratio bound requires x >= 1");
  if (c4 <= 0) throw std::invalid_argument("c4 must be positive");
  chain_exponent(params);
  RationalInterval ln_x = log_enclosure(Rational(static_cast<unsigned long>(x)));
  RationalInterval ln_c4 = log_enclosure(c4);
  RationalInterval denom = params.exponent() * log2_enclosure();
  return Rational(2) + (ln_x - ln_c4) * reciprocal(denom);
}

Verdict theorem_check_euler(unsigned s, std::uint64_t x, std::uint64_t pi_x,
                            const IrrationalityParams& params,
                            const RationalInterval& zeta_s) {
  if (s < 2) throw std::invalid_argument("euler chain requires s >= 2");
  if (x < 1) throw std::invalid_argument("euler chain requires x >= 1");
  if (zeta_s.lo <= 0) throw std::invalid_argument("zeta enclosure must be positive");
  ExpParts e = chain_exponent(params);
  long k = (static_cast<long>(pi_x) - static_cast<long>(s) - 1) * static_cast<long>(e.a);
  Rational xs(pow_int(Int(static_cast<unsigned long>(x)), s - 1));
  Rational rhs_hi = pow_rational(Rational(s - 1) * zeta_s.hi * xs, static_cast<long>(e.b));
  if (cmp_pow2(k, rhs_hi) >= 0) return Verdict::holds;
  Rational rhs_lo = pow_rational(Rational(s - 1) * zeta_s.lo * xs, static_cast<long>(e.b));
  if (cmp_pow2(k, rhs_lo) < 0) return Verdict::fails;
  return Verdict::indeterminate;
}

Verdict theorem_check_ratio(std::uint64_t x, std::uint64_t pi_x,
                            const IrrationalityParams& params,
                            const Rational& c4) {
  if (x < 1) throw std::invalid_argument("ratio chain requires x >= 1");
  if (c4 <= 0) throw std::invalid_argument("c4 must be positive");
  ExpParts e = chain_exponent(params);
  long k = (static_cast<long>(pi_x) - 2) * static_cast<long>(e.a);
  Rational rhs = pow_rational(Rational(static_cast<unsigned long>(x)) / c4,
                              static_cast<long>(e.b));
  return cmp_pow2(k, rhs) >= 0 ? Verdict::holds : Verdict::fails;
}

bool BoundReport::all_links_hold() const {
  return std::all_of(links.begin(), links.end(), [](const BoundLink& l) {
    return l.verdict == Verdict::holds;
  });
}

namespace {

// Shared by both chains: the growth link compares 2^(pi-s-1) against the
// reduced denominator, and the measure-gap link checks
// 1/q^(mu+eps) <= 2^(-(pi-s-1)(mu+eps)) exactly via q^a vs 2^((pi-s-1) a).
BoundLink growth_link(const ProductRecord& rec, const GrowthVerdict& gv) {
  BoundLink link;
  link.name = "growth";
  long e2 = static_cast<long>(rec.pi_x) - static_cast<long>(rec.s) - 1;
  link.lhs = RationalInterval(pow_rational(Rational(2), e2));
  link.rhs = RationalInterval(Rational(rec.fraction.get_den()));
  link.verdict = gv.all() ? Verdict::holds : Verdict::fails;
  link.slack = link.rhs.lo - link.lhs.hi;
  link.note = std::string("raw numerator 2-divisibility: ") + yes_no(gv.raw_num_divisible) +
              " (slack " + std::to_string(gv.v2_slack) + "), raw denominator valuation exact: " +
              yes_no(gv.raw_den_exact) + ", reduced numerator growth: " +
              yes_no(gv.numerator_growth) + ", ordering: " + yes_no(gv.ordering);
  return link;
}

BoundLink measure_gap_link(const ProductRecord& rec,
                           const IrrationalityParams& params, ExpParts e) {
  BoundLink link;
  link.name = "measure-gap";
  const Int& q = rec.fraction.get_den();
  long e2 = static_cast<long>(rec.pi_x) - static_cast<long>(rec.s) - 1;
  long k = e2 * static_cast<long>(e.a);
  Rational qa(pow_int(q, e.a));
  link.verdict = cmp_pow2(k, qa) <= 0 ? Verdict::holds : Verdict::fails;
  link.lhs = RationalInterval(measure_gap(q, params).value);
  link.rhs = RationalInterval(
      pow_rational(Rational(2), -ceil_div(k, static_cast<long>(e.b))));
  link.slack = link.rhs.lo - link.lhs.hi;
  link.note = "displayed sides are one-sided bounds; the verdict clears the "
              "fractional exponent and compares exactly";
  return link;
}

BoundLink link_from_diff(const char* name, const DiffReport& d) {
  BoundLink link;
  link.name = name;
  link.verdict = d.verdict;
  link.lhs = d.lhs;
  link.rhs = d.rhs;
  link.slack = d.slack;
  return link;
}

}  // namespace

BoundReport verify_chain_euler(unsigned s, std::uint64_t x,
                               const ChainOptions& opt, const PrimeTable& table) {
  ChainOptions resolved = opt;
  if (resolved.terms == 0)
    resolved.terms = zeta_terms_for_width(s, Rational(1, 100000000));
  return verify_chain_euler(s, x, resolved, table,
                            zeta_interval(s, resolved.terms));
}

BoundReport verify_chain_euler(unsigned s, std::uint64_t x,
                               const ChainOptions& opt, const PrimeTable& table,
                               const RationalInterval& zint) {
  ExpParts e = chain_exponent(opt.params);
  BoundReport rep;
  rep.chain = ProductKind::euler;
  rep.s = s;
  rep.x = x;
  rep.params = opt.params;
  rep.c4 = opt.c4;
  rep.safety = opt.safety;
  ProductRecord rec = euler_partial(s, x, table);
  rep.pi_x = rec.pi_x;
  rep.terms = opt.terms;

  rep.links.push_back(growth_link(rec, growth_check_euler(rec)));
  rep.links.push_back(measure_gap_link(rec, opt.params, e));

  {
    RationalInterval inv_z = reciprocal(zint);
    DiffReport d;
    d.lhs = interval_abs(inv_z - RationalInterval(rec.fraction));
    d.rhs = euler_tail_bound(s, x) * inv_z;
    d.verdict = interval_leq(d.lhs, d.rhs);
    d.slack = d.rhs.lo - d.lhs.hi;
    rep.links.push_back(link_from_diff("difference", d));
  }

  rep.bound = pi_lower_bound_euler(s, x, opt.params, zint);
  rep.theorem = theorem_check_euler(s, x, rep.pi_x, opt.params, zint);
  BoundLink thm;
  thm.name = "theorem";
  thm.verdict = rep.theorem;
  thm.lhs = rep.bound;
  thm.rhs = RationalInterval(Rational(static_cast<unsigned long>(rep.pi_x)));
  thm.slack = thm.rhs.lo - thm.lhs.hi;
  thm.note = "decided by the exponentiated exact form, not the displayed enclosure";
  rep.links.push_back(std::move(thm));
  return rep;
}

BoundReport verify_chain_ratio(std::uint64_t x, const ChainOptions& opt,
                               const PrimeTable& table) {
  ExpParts e = chain_exponent(opt.params);
  if (opt.c4 <= 0) throw std::invalid_argument("c4 must be positive");
  if (opt.safety < 1) throw std::invalid_argument("safety factor must be >= 1");
  BoundReport rep;
  rep.chain = ProductKind::ratio;
  rep.s = 1;
  rep.x = x;
  rep.params = opt.params;
  rep.c4 = opt.c4;
  rep.safety = opt.safety;
  rep.terms = 0;  // no zeta enclosure in this chain
  ProductRecord rec = ratio_partial(1, x, table);
  rep.pi_x = rec.pi_x;

  rep.links.push_back(growth_link(rec, growth_check_ratio(rec)));
  rep.links.push_back(measure_gap_link(rec, opt.params, e));

  Rational diff = abs(Rational(2, 5) - rec.fraction);
  {
    DiffReport d;
    d.lhs = RationalInterval(diff);
    d.rhs = RationalInterval(opt.c4 / Rational(static_cast<unsigned long>(x)));
    d.verdict = diff <= d.rhs.lo ? Verdict::holds : Verdict::fails;
    d.slack = d.rhs.lo - diff;
    d.min_c4 = diff * Rational(static_cast<unsigned long>(x));
    BoundLink link = link_from_diff("difference", d);
    link.note = "minimal admissible c4 at this x: " + to_string(d.min_c4);
    rep.links.push_back(std::move(link));
  }
  {
    // Leading tail term inflated by the safety factor; the note records
    // whether the bare term was already enough.
    Rational raw = ratio_tail_bound(1, x);
    Rational inflated = opt.safety * raw;
    BoundLink link;
    link.name = "tail-bound";
    link.lhs = RationalInterval(diff);
    link.rhs = RationalInterval(inflated);
    link.verdict = diff <= inflated ? Verdict::holds : Verdict::fails;
    link.slack = inflated - diff;
    link.note = std::string("bare leading term ") + to_string(raw) +
                (diff <= raw ? " also holds" : " does not hold on its own");
    rep.links.push_back(std::move(link));
  }

  rep.bound = pi_lower_bound_ratio(x, opt.params, opt.c4);
  rep.theorem = theorem_check_ratio(x, rep.pi_x, opt.params, opt.c4);
  BoundLink thm;
  thm.name = "theorem";
  thm.verdict = rep.theorem;
  thm.lhs = rep.bound;
  thm.rhs = RationalInterval(Rational(static_cast<unsigned long>(rep.pi_x)));
  thm.slack = thm.rhs.lo - thm.lhs.hi;
  thm.note = "decided by the exponentiated exact form, not the displayed enclosure";
  rep.links.push_back(std::move(thm));
  return rep;
}

BoundReport verify_chain(ProductKind chain, unsigned s, std::uint64_t x,
                         const ChainOptions& opt, const PrimeTable& table) {
  switch (chain) {
    case ProductKind::euler: return verify_chain_euler(s, x, opt, table);
    case ProductKind::ratio: return verify_chain_ratio(x, opt, table);
    case ProductKind::l_chi4: break;
  }
  throw std::invalid_argument("no inequality chain is attached to this product");
}

namespace {

void finish_scan(TheoremScan& scan) {
  std::uint64_t last_bad = 1;
  if (!scan.violations.empty()) last_bad = std::max(last_bad, scan.violations.back());
  if (!scan.indeterminate.empty()) last_bad = std::max(last_bad, scan.indeterminate.back());
  scan.first_safe_x = last_bad + 1;
}

}  // namespace

TheoremScan theorem_scan_euler(unsigned s, std::uint64_t x_max,
                               const IrrationalityParams& params,
                               const RationalInterval& zeta_s,
                               const PrimeTable& table) {
  if (s < 2) throw std::invalid_argument("euler chain requires s >= 2");
  if (zeta_s.lo <= 0) throw std::invalid_argument("zeta enclosure must be positive");
  if (x_max > table.limit()) throw std::out_of_range("scan range exceeds the prime table");
  ExpParts e = chain_exponent(params);
  // Dyadic pre-rounding caps the endpoint size before the b-th power; the
  // widening is far below the enclosure widths that matter here.
  RationalInterval z = round_outward(zeta_s, 128);
  Rational lo_pow = pow_rational(Rational(s - 1) * z.lo, static_cast<long>(e.b));
  Rational hi_pow = pow_rational(Rational(s - 1) * z.hi, static_cast<long>(e.b));
  unsigned long xe = static_cast<unsigned long>(s - 1) * e.b;

  auto check = [&](std::uint64_t x, std::uint64_t pi) {
    long k = (static_cast<long>(pi) - static_cast<long>(s) - 1) * static_cast<long>(e.a);
    Int xp;
    mpz_ui_pow_ui(xp.get_mpz_t(), static_cast<unsigned long>(x), xe);
    if (cmp_pow2(k, hi_pow * Rational(xp)) >= 0) return Verdict::holds;
    if (cmp_pow2(k, lo_pow * Rational(xp)) < 0) return Verdict::fails;
    return Verdict::indeterminate;
  };

  TheoremScan scan;
  const auto& ps = table.primes();
  for (std::size_t i = 0; i < ps.size() && ps[i] <= x_max; ++i) {
    std::uint64_t end = (i + 1 < ps.size()) ? std::min<std::uint64_t>(ps[i + 1] - 1, x_max)
                                            : x_max;
    // pi is constant on [ps[i], end] and the right side grows with x, so a
    // holding block end clears the whole block.
    if (check(end, i + 1) == Verdict::holds) continue;
    for (std::uint64_t x = ps[i]; x <= end; ++x) {
      Verdict v = check(x, i + 1);
      if (v == Verdict::fails) scan.violations.push_back(x);
      else if (v == Verdict::indeterminate) scan.indeterminate.push_back(x);
    }
  }
  finish_scan(scan);
  return scan;
}

TheoremScan theorem_scan_ratio(std::uint64_t x_max,
                               const IrrationalityParams& params,
                               const Rational& c4, const PrimeTable& table) {
  if (c4 <= 0) throw std::invalid_argument("c4 must be positive");
  if (x_max > table.limit()) throw std::out_of_range("scan range exceeds the prime table");
  ExpParts e = chain_exponent(params);
  Rational c4_pow = pow_rational(c4, static_cast<long>(e.b));

  auto check = [&](std::uint64_t x, std::uint64_t pi) {
    long k = (static_cast<long>(pi) - 2) * static_cast<long>(e.a);
    Int xp;
    mpz_ui_pow_ui(xp.get_mpz_t(), static_cast<unsigned long>(x), e.b);
    return cmp_pow2(k, Rational(xp) / c4_pow) >= 0 ? Verdict::holds : Verdict::fails;
  };

  TheoremScan scan;
  const auto& ps = table.primes();
  for (std::size_t i = 0; i < ps.size() && ps[i] <= x_max; ++i) {
    std::uint64_t end = (i + 1 < ps.size()) ? std::min<std::uint64_t>(ps[i + 1] - 1, x_max)
                                            : x_max;
    if (check(end, i + 1) == Verdict::holds) continue;
    for (std::uint64_t x = ps[i]; x <= end; ++x) {
      if (check(x, i + 1) == Verdict::fails) scan.violations.push_back(x);
    }
  }
  finish_scan(scan);
  return scan;
}

}  // namespace pibound
