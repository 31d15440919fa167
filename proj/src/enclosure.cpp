#include "pibound/enclosure.hpp"

namespace pibound {
namespace {

constexpr unsigned kDyadicBits = 192;

// floor(log2 v) for v > 0, so that v / 2^m lies in [1, 2).
long floor_log2(const Rational& v) {
  long m = static_cast<long>(mpz_sizeinbase(v.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(v.get_den().get_mpz_t(), 2));
  // sizeinbase is only exact for powers of two; settle the off-by-one.
  while (cmp_pow2(m, v) > 0) --m;
  while (cmp_pow2(m + 1, v) <= 0) ++m;
  return m;
}

// Enclosure of ln u for u in [1, 2], exact input (z <= 1/3 there).
RationalInterval log_mantissa(const Rational& u, unsigned terms) {
  Rational z = (u - 1) / (u + 1);  // in [0, 1/3]
  if (z == 0) return {Rational(0), Rational(0)};
  Rational z2 = z * z;
  Rational term = z;  // z^(2j+1)
  Rational sum = 0;
  for (unsigned j = 0; j < terms; ++j) {
    sum += term / Rational(2 * j + 1);
    term *= z2;
  }
  // tail: 2 * sum_{j>=terms} z^(2j+1)/(2j+1) <= 2 z^(2K+1) / ((2K+1)(1-z^2))
  Rational tail = 2 * term / (Rational(2 * terms + 1) * (1 - z2));
  Rational lo = 2 * sum;
  return {lo, lo + tail};
}

}  // namespace

// ln 2 = 2 atanh(1/3), the mantissa series evaluated at u = 2.
const RationalInterval& log2_enclosure() {
  static const RationalInterval value = log_mantissa(Rational(2), 64);
  return value;
}

RationalInterval log_enclosure(const Rational& v, unsigned terms) {
  if (v <= 0) throw std::domain_error("log: non-positive argument");
  if (v == 1) return {Rational(0), Rational(0)};
  // Bound the input's representation before series expansion.
  Rational lo = round_down(v, kDyadicBits);
  Rational hi = round_up(v, kDyadicBits);
  if (lo <= 0) lo = v;  // tiny v rounded to zero: keep exact value

  const RationalInterval& ln2 = log2_enclosure();
  auto one_sided = [&](const Rational& w) {
    long m = floor_log2(w);
    Rational u = w / pow_rational(Rational(2), m);  // in [1, 2)
    RationalInterval lu = log_mantissa(u, terms);
    RationalInterval ml = Rational(m) * ln2;
    return lu + ml;
  };
  RationalInterval a = one_sided(lo);
  RationalInterval b = one_sided(hi);
  return {a.lo, b.hi};
}

RationalInterval log_enclosure(const RationalInterval& v, unsigned terms) {
  if (v.lo <= 0) throw std::domain_error("log: interval reaches zero");
  RationalInterval a = log_enclosure(v.lo, terms);
  RationalInterval b = log_enclosure(v.hi, terms);
  return {a.lo, b.hi};
}

RationalInterval loglog_enclosure(const Rational& x, unsigned terms) {
  RationalInterval inner = log_enclosure(x, terms);
  if (inner.lo <= 0)
    throw std::domain_error("loglog: ln x not provably positive");
  return log_enclosure(inner, terms);
}

}  // namespace pibound
