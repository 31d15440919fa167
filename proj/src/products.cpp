#include "pibound/products.hpp"

#include <stdexcept>
#include <string>

namespace pibound {

namespace {

// Raw factor of one partial product, before any reduction.
struct RawFactor {
  Int num;
  Int den;
};

RawFactor make_factor(ProductKind kind, unsigned s, std::uint64_t p) {
  Int pz(static_cast<unsigned long>(p));
  switch (kind) {
    case ProductKind::euler: {
      Int ps = pow_int(pz, s);
      return {ps - 1, ps};
    }
    case ProductKind::ratio: {
      Int p2s = pow_int(pz, 2 * s);
      return {p2s - 1, p2s + 1};
    }
    case ProductKind::l_chi4: {
      if (p == 2) return {Int(1), Int(1)};
      Int p3 = pz * pz * pz;
      if (p % 4 == 1) {
        Int d = pz - 1;
        return {p3 - 1, d * d * d};
      }
      Int d = pz + 1;
      return {p3 + 1, d * d * d};
    }
  }
  throw std::logic_error("unhandled product kind");
}

Int pow2(unsigned long e) {
  Int r;
  mpz_mul_2exp(r.get_mpz_t(), Int(1).get_mpz_t(), e);
  return r;
}

}  // namespace

const char* to_string(ProductKind k) {
  switch (k) {
    case ProductKind::euler: return "euler";
    case ProductKind::ratio: return "ratio";
    case ProductKind::l_chi4: return "l-chi4";
  }
  return "?";
}

std::optional<ProductKind> product_kind_from_string(const std::string& name) {
  if (name == "euler") return ProductKind::euler;
  if (name == "ratio") return ProductKind::ratio;
  if (name == "l-chi4" || name == "l_chi4" || name == "lchi4") return ProductKind::l_chi4;
  return std::nullopt;
}

ProductScan::ProductScan(ProductKind kind, unsigned s, const PrimeTable& table)
    : kind_(kind), s_(s), table_(table) {
  if (kind == ProductKind::l_chi4) {
    if (s != 1) throw std::invalid_argument("l-chi4 product has no exponent parameter (s must be 1)");
  } else if (s < 1) {
    throw std::invalid_argument("product exponent must be >= 1");
  }
}

void ProductScan::advance_to(std::uint64_t x) {
  if (x < x_) throw std::invalid_argument("product scan cannot move backwards");
  if (x > table_.limit()) throw std::out_of_range("product cutoff exceeds the prime table");
  const auto& ps = table_.primes();
  while (next_idx_ < ps.size() && ps[next_idx_] <= x) {
    append(ps[next_idx_]);
    ++next_idx_;
  }
  x_ = x;
}

void ProductScan::append(std::uint64_t p) {
  RawFactor f = make_factor(kind_, s_, p);
  if (f.num != f.den) ++contributing_;
  v2_num_ += two_adic_valuation(f.num);
  v2_den_ += two_adic_valuation(f.den);
  // the factor itself may share a divisor (cubic factors share up to 4, the
  // even pair of a ratio factor shares 2), and mpq arithmetic is only
  // correct on canonical operands
  Rational factor(f.num, f.den);
  factor.canonicalize();
  fraction_ *= factor;
}

ProductRecord ProductScan::record() const {
  ProductRecord r;
  r.kind = kind_;
  r.s = s_;
  r.x = x_;
  r.pi_x = next_idx_;
  r.fraction = fraction_;
  r.v2_raw_num = v2_num_;
  r.v2_raw_den = v2_den_;
  r.empty_product = (contributing_ == 0);
  return r;
}

ProductRecord euler_partial(unsigned s, std::uint64_t x, const PrimeTable& table) {
  if (s < 2) throw std::invalid_argument("euler product requires s >= 2");
  ProductScan scan(ProductKind::euler, s, table);
  scan.advance_to(x);
  return scan.record();
}

ProductRecord ratio_partial(unsigned s, std::uint64_t x, const PrimeTable& table) {
  ProductScan scan(ProductKind::ratio, s, table);
  scan.advance_to(x);
  return scan.record();
}

ProductRecord l_chi4_partial(std::uint64_t x, const PrimeTable& table) {
  ProductScan scan(ProductKind::l_chi4, 1, table);
  scan.advance_to(x);
  return scan.record();
}

namespace {

// num(fraction) >= 2^e, where e may be negative (then trivially true).
bool numerator_at_least_pow2(const Rational& fraction, long e) {
  if (e < 0) return true;
  return fraction.get_num() >= pow2(static_cast<unsigned long>(e));
}

}  // namespace

GrowthVerdict growth_check_euler(const ProductRecord& record) {
  if (record.kind != ProductKind::euler)
    throw std::invalid_argument("growth_check_euler expects a euler record");
  GrowthVerdict v;
  // p = 2 contributes 2^s to the raw denominator; every other factor is odd.
  unsigned long den_expected = record.pi_x >= 1 ? record.s : 0;
  // Each odd prime's p^s - 1 is even; 2^s - 1 is odd.
  unsigned long num_required = record.pi_x >= 1 ? record.pi_x - 1 : 0;
  v.raw_num_divisible = record.v2_raw_num >= num_required;
  v.raw_den_exact = record.v2_raw_den == den_expected;
  v.v2_slack = static_cast<long>(record.v2_raw_num) - static_cast<long>(num_required);
  long e = static_cast<long>(record.pi_x) - static_cast<long>(record.s) - 1;
  v.numerator_growth = numerator_at_least_pow2(record.fraction, e);
  v.ordering = record.fraction.get_den() >= record.fraction.get_num();
  return v;
}

GrowthVerdict growth_check_ratio(const ProductRecord& record) {
  if (record.kind != ProductKind::ratio)
    throw std::invalid_argument("growth_check_ratio expects a ratio record");
  GrowthVerdict v;
  // Odd p: p^2s + 1 = 2 mod 4, so v2 = 1 exactly; p = 2 gives an odd 2^2s + 1.
  unsigned long den_expected = record.pi_x >= 1 ? record.pi_x - 1 : 0;
  // Odd p: p^2s - 1 = (p^s - 1)(p^s + 1), both factors even, so v2 >= 2.
  // 2^2s - 1 is odd.
  unsigned long num_required = record.pi_x >= 1 ? 2 * (record.pi_x - 1) : 0;
  v.raw_num_divisible = record.v2_raw_num >= num_required;
  v.raw_den_exact = record.v2_raw_den == den_expected;
  v.v2_slack = static_cast<long>(record.v2_raw_num) - static_cast<long>(num_required);
  long e = static_cast<long>(record.pi_x) - static_cast<long>(record.s) - 1;
  v.numerator_growth = numerator_at_least_pow2(record.fraction, e);
  // 1/4 <= p/q <= 1: compare 4p >= q and p <= q.
  const Int& p = record.fraction.get_num();
  const Int& q = record.fraction.get_den();
  v.ordering = (4 * p >= q) && (p <= q);
  return v;
}

std::optional<std::uint64_t> growth_scan(ProductKind kind, unsigned s,
                                         std::uint64_t x_max,
                                         const PrimeTable& table) {
  if (kind == ProductKind::l_chi4)
    throw std::invalid_argument("no growth claims are attached to the l-chi4 product");
  ProductScan scan(kind, s, table);
  // The record is constant between primes, so checking at each prime covers
  // every cutoff in [2, x_max].
  for (std::uint64_t p : table.primes()) {
    if (p > x_max) break;
    scan.advance_to(p);
    ProductRecord rec = scan.record();
    GrowthVerdict v = kind == ProductKind::euler ? growth_check_euler(rec)
                                                 : growth_check_ratio(rec);
    if (!v.all()) return p;
  }
  return std::nullopt;
}

}  // namespace pibound
