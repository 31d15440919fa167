#include "pibound/zeta.hpp"

#include <stdexcept>
#include <utility>

namespace pibound {

BernoulliCache::BernoulliCache(unsigned max_m) {
  values_.reserve(max_m + 1);
  values_.emplace_back(1);  // B_0
  for (unsigned m = 1; m <= max_m; ++m) {
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    Rational acc = 0;
    Int binom;
    for (unsigned j = 0; j < m; ++j) {
      if (j >= 3 && j % 2 == 1) continue;  // odd-index values vanish past B_1
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      acc += Rational(binom) * values_[j];
    }
    acc /= -static_cast<long>(m + 1);
    values_.push_back(std::move(acc));
  }
}

const Rational& BernoulliCache::at(unsigned m) const {
  if (m >= values_.size()) throw std::out_of_range("Bernoulli index beyond cache");
  return values_[m];
}

Rational zeta_even_coefficient(unsigned n, const BernoulliCache& cache) {
  if (n == 0) throw std::invalid_argument("zeta coefficient requires n >= 1");
  // zeta(2n) = (-1)^(n+1) B_{2n} (2 pi)^(2n) / (2 (2n)!)
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), 2 * n);
  Int two_pow;
  mpz_mul_2exp(two_pow.get_mpz_t(), Int(1).get_mpz_t(), 2 * n - 1);
  Rational r = cache.at(2 * n) * Rational(two_pow) / Rational(fact);
  if (n % 2 == 0) r = -r;
  return r;
}

Rational zeta_ratio_exact(unsigned n, const BernoulliCache& cache) {
  if (n == 0) throw std::invalid_argument("zeta ratio requires n >= 1");
  // zeta(2n)^2 / zeta(4n) = -(4n)! B_{2n}^2 / (2 ((2n)!)^2 B_{4n})
  Int fact2n, fact4n;
  mpz_fac_ui(fact2n.get_mpz_t(), 2 * n);
  mpz_fac_ui(fact4n.get_mpz_t(), 4 * n);
  const Rational& b2n = cache.at(2 * n);
  const Rational& b4n = cache.at(4 * n);
  Rational num = Rational(fact4n) * b2n * b2n;
  Rational den = 2 * Rational(fact2n) * Rational(fact2n) * b4n;
  return -(num / den);
}

namespace {

// Unreduced fraction; reduction is deferred to the root of the sum tree.
struct RawSum {
  Int num;
  Int den;
};

// sum_{n=a}^{b} 1/n^s by balanced splitting, no intermediate gcds.
RawSum harmonic_power_sum(std::uint64_t a, std::uint64_t b, unsigned s) {
  if (a == b) {
    return {Int(1), pow_int(Int(static_cast<unsigned long>(a)), s)};
  }
  std::uint64_t mid = a + (b - a) / 2;
  RawSum left = harmonic_power_sum(a, mid, s);
  RawSum right = harmonic_power_sum(mid + 1, b, s);
  return {left.num * right.den + right.num * left.den, left.den * right.den};
}

// Exact width of the integral tail bracket after t terms:
// (t^(1-s) - (t+1)^(1-s)) / (s-1).
Rational tail_bracket_width(unsigned s, std::uint64_t t) {
  long e = 1 - static_cast<long>(s);
  Rational lo_pow = pow_rational(Rational(static_cast<unsigned long>(t) + 1), e);
  Rational hi_pow = pow_rational(Rational(static_cast<unsigned long>(t)), e);
  return (hi_pow - lo_pow) / static_cast<long>(s - 1);
}

}  // namespace

RationalInterval zeta_interval(unsigned s, std::uint64_t terms) {
  if (s < 2) throw std::invalid_argument("zeta enclosure requires s >= 2");
  if (terms < 2) throw std::invalid_argument("zeta enclosure requires terms >= 2");
  RawSum raw = harmonic_power_sum(1, terms, s);
  Rational partial = make_rational(raw.num, raw.den);
  // The tail sum_{n>t} n^-s lies between the integrals from t+1 and from t.
  long e = 1 - static_cast<long>(s);
  Rational tail_lo =
      pow_rational(Rational(static_cast<unsigned long>(terms) + 1), e) / static_cast<long>(s - 1);
  Rational tail_hi =
      pow_rational(Rational(static_cast<unsigned long>(terms)), e) / static_cast<long>(s - 1);
  return RationalInterval(partial + tail_lo, partial + tail_hi);
}

std::uint64_t zeta_terms_for_width(unsigned s, const Rational& target) {
  if (s < 2) throw std::invalid_argument("zeta enclosure requires s >= 2");
  if (target <= 0) throw std::invalid_argument("width target must be positive");
  std::uint64_t hi = 2;
  while (tail_bracket_width(s, hi) > target) {
    if (hi > (std::uint64_t(1) << 62)) throw std::overflow_error("width target unreachable");
    hi *= 2;
  }
  std::uint64_t lo = hi / 2 < 2 ? 2 : hi / 2;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (tail_bracket_width(s, mid) <= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return hi;
}

Rational l_chi4_target() { return Rational(1, 2); }

}  // namespace pibound
