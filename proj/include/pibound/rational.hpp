#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pibound {

// Exact arithmetic types. mpq_class keeps values canonical: lowest terms,
// positive denominator.
using Int = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form. Throws std::invalid_argument on den = 0.
Rational make_rational(const Int& num, const Int& den);

// Parses "num", "num/den" or a decimal literal like "0.1" into an exact
// rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// Canonical text form, GMP style: "num" when den = 1, else "num/den".
std::string to_string(const Rational& value);

// Fixed-point decimal rendering with `digits` places after the point,
// rounded half away from zero. Pure integer arithmetic, so the output is
// identical across platforms.
std::string decimal_string(const Rational& value, std::size_t digits);

Int pow_int(const Int& base, unsigned long exponent);
Rational pow_rational(const Rational& base, long exponent);

// Sign of 2^k - value. Exact for any signed k.
int cmp_pow2(long k, const Rational& value);

// Three-valued outcome of a comparison made through enclosures.
enum class Verdict { holds, fails, indeterminate };

const char* to_string(Verdict v);

// Closed interval with exact rational endpoints. Every operation returns an
// interval guaranteed to contain the exact image of its inputs.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational single) : lo(single), hi(std::move(single)) {}
  RationalInterval(Rational l, Rational h);

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains(const RationalInterval& v) const {
    return lo <= v.lo && v.hi <= hi;
  }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const Rational& k, const RationalInterval& a);
RationalInterval operator+(const Rational& k, const RationalInterval& a);

// 1/a for an interval not containing zero. Throws std::domain_error otherwise.
RationalInterval reciprocal(const RationalInterval& a);

// |a| as an interval.
RationalInterval interval_abs(const RationalInterval& a);

// a^e for non-negative intervals, e >= 0.
RationalInterval interval_pow(const RationalInterval& a, unsigned long e);

// Certain comparison a <= b: holds when sup a <= inf b, fails when
// inf a > sup b, indeterminate when the intervals overlap.
Verdict interval_leq(const RationalInterval& a, const RationalInterval& b);

// Widens endpoints outward onto the grid of multiples of 2^-bits. Bounds the
// representation size of downstream computations at a width cost of at most
// 2^(1-bits).
RationalInterval round_outward(const RationalInterval& a, unsigned bits);
Rational round_down(const Rational& v, unsigned bits);
Rational round_up(const Rational& v, unsigned bits);

}  // namespace pibound
