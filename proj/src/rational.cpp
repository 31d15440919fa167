#include "pibound/rational.hpp"

#include <cctype>

namespace pibound {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    // decimal literal: digits.digits -> (int_part * 10^k + frac_part) / 10^k
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (neg) head.erase(0, 1);
    if (!head.empty() && head[0] == '+') head.erase(0, 1);
    if (head.empty()) head = "0";
    if (tail.empty()) tail = "0";
    for (const std::string* part : {&head, &tail})
      for (char c : *part)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("rational: malformed decimal '" + text + "'");
    Int scale = pow_int(10, static_cast<unsigned long>(tail.size()));
    // explicit base 10: the mpz string constructor defaults to base 0, which
    // reads a leading zero ("1.05" -> tail "05") as octal
    Int value = Int(head, 10) * scale + Int(tail, 10);
    if (neg) value = -value;
    return make_rational(value, scale);
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("rational: malformed value '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string decimal_string(const Rational& value, std::size_t digits) {
  const bool neg = value < 0;
  Int num = abs(value.get_num());
  const Int& den = value.get_den();
  Int scale = pow_int(10, static_cast<unsigned long>(digits));
  // round half away from zero: floor((2*num*scale + den) / (2*den))
  Int scaled = (2 * num * scale + den) / (2 * den);
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::string out = neg && (whole != 0 || frac != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

Int pow_int(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow_rational(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("rational: 0 to a negative power");
    return make_rational(pow_int(base.get_den(), static_cast<unsigned long>(-exponent)),
                         pow_int(base.get_num(), static_cast<unsigned long>(-exponent)));
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return r;  // base canonical => powers share no factor
}

int cmp_pow2(long k, const Rational& value) {
  if (value <= 0) return 1;
  // 2^(Ln-Ld-1) < num/den < 2^(Ln-Ld+1), so k outside that window decides
  // by bit lengths alone and no big shift is needed.
  long ln = static_cast<long>(mpz_sizeinbase(value.get_num().get_mpz_t(), 2));
  long ld = static_cast<long>(mpz_sizeinbase(value.get_den().get_mpz_t(), 2));
  if (k >= ln - ld + 1) return 1;
  if (k <= ln - ld - 1) return -1;
  // compare 2^k * den with num, shifting whichever side keeps integers
  Int lhs = value.get_den();
  Int rhs = value.get_num();
  if (k >= 0)
    lhs <<= static_cast<unsigned long>(k);
  else
    rhs <<= static_cast<unsigned long>(-k);
  return cmp(lhs, rhs);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "indeterminate";
  }
}

RationalInterval::RationalInterval(Rational l, Rational h)
    : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("interval: lo > hi");
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {lo, hi};
}

RationalInterval operator*(const Rational& k, const RationalInterval& a) {
  if (k >= 0) return {k * a.lo, k * a.hi};
  return {k * a.hi, k * a.lo};
}

RationalInterval operator+(const Rational& k, const RationalInterval& a) {
  return {k + a.lo, k + a.hi};
}

RationalInterval reciprocal(const RationalInterval& a) {
  if (a.lo <= 0 && a.hi >= 0)
    throw std::domain_error("interval: reciprocal of interval containing zero");
  return {1 / a.hi, 1 / a.lo};
}

RationalInterval interval_abs(const RationalInterval& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return {-a.hi, -a.lo};
  return {Rational(0), std::max(Rational(-a.lo), a.hi)};
}

RationalInterval interval_pow(const RationalInterval& a, unsigned long e) {
  if (a.lo < 0) throw std::domain_error("interval: pow of negative interval");
  return {pow_rational(a.lo, static_cast<long>(e)),
          pow_rational(a.hi, static_cast<long>(e))};
}

Verdict interval_leq(const RationalInterval& a, const RationalInterval& b) {
  if (a.hi <= b.lo) return Verdict::holds;
  if (a.lo > b.hi) return Verdict::fails;
  return Verdict::indeterminate;
}

Rational round_down(const Rational& v, unsigned bits) {
  Int num = v.get_num() << bits;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
  return make_rational(q, Int(1) << bits);
}

Rational round_up(const Rational& v, unsigned bits) {
  Int num = v.get_num() << bits;
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
  return make_rational(q, Int(1) << bits);
}

RationalInterval round_outward(const RationalInterval& a, unsigned bits) {
  return {round_down(a.lo, bits), round_up(a.hi, bits)};
}

}  // namespace pibound
