#pragma once

#include "pibound/primes.hpp"
#include "pibound/rational.hpp"

#include <cstdint>
#include <optional>

namespace pibound {

enum class ProductKind { euler, ratio, l_chi4 };

const char* to_string(ProductKind k);
std::optional<ProductKind> product_kind_from_string(const std::string& name);

// One partial product over the primes <= x, kept as an exact reduced
// fraction. The 2-adic valuations refer to the raw (unreduced) numerator and
// denominator products, which carry the divisibility claims the reduced
// fraction hides.
struct ProductRecord {
  ProductKind kind = ProductKind::euler;
  unsigned s = 2;             // exponent parameter (fixed 1 for l_chi4)
  std::uint64_t x = 0;        // cutoff
  std::uint64_t pi_x = 0;     // primes consumed
  Rational fraction = 1;      // reduced partial product
  unsigned long v2_raw_num = 0;
  unsigned long v2_raw_den = 0;
  bool empty_product = false; // x below the first contributing prime
};

// Incremental scanner: consumes primes in increasing order, maintaining the
// reduced fraction (one gcd per appended factor) and the raw valuations.
// The record is a step function of x, constant between primes.
//
// euler accepts s >= 1 here; the s = 1 case exists only for the growth
// checks, and euler_partial below enforces s >= 2.
class ProductScan {
 public:
  ProductScan(ProductKind kind, unsigned s, const PrimeTable& table);

  // Consume primes in (current, x]. x must not decrease across calls.
  void advance_to(std::uint64_t x);

  ProductRecord record() const;
  std::uint64_t position() const { return x_; }

 private:
  void append(std::uint64_t p);

  ProductKind kind_;
  unsigned s_;
  const PrimeTable& table_;
  std::size_t next_idx_ = 0;
  std::uint64_t x_ = 1;
  std::uint64_t contributing_ = 0;
  Rational fraction_ = 1;
  unsigned long v2_num_ = 0;
  unsigned long v2_den_ = 0;
};

// prod_{p<=x} (p^s - 1) / p^s, s >= 2 (s = 1 rejected: the limit object
// degenerates). x < 2 yields the empty product 1/1 with the flag set.
ProductRecord euler_partial(unsigned s, std::uint64_t x, const PrimeTable& table);

// prod_{p<=x} (p^2s - 1) / (p^2s + 1), s >= 1.
ProductRecord ratio_partial(unsigned s, std::uint64_t x, const PrimeTable& table);

// prod over odd p <= x of (p^3 - 1)/(p - 1)^3 for p = 1 mod 4 and
// (p^3 + 1)/(p + 1)^3 for p = 3 mod 4 (p = 2 contributes the factor 1).
// x < 3 yields the empty product 1/1 with the flag set.
ProductRecord l_chi4_partial(std::uint64_t x, const PrimeTable& table);

// Divisibility and growth claims checked against one record. All claims are
// decided exactly; a negative verdict is a value, not an error.
struct GrowthVerdict {
  bool raw_num_divisible = false;  // required power of 2 divides the raw numerator
  bool raw_den_exact = false;      // v2 of the raw denominator hits its exact value
  bool numerator_growth = false;   // reduced numerator >= 2^(pi(x)-s-1)
  bool ordering = false;           // euler: q >= p; ratio: 1/4 <= p/q <= 1
  long v2_slack = 0;               // v2(raw num) minus required
  bool all() const {
    return raw_num_divisible && raw_den_exact && numerator_growth && ordering;
  }
};

// kind must match; throws std::invalid_argument otherwise.
GrowthVerdict growth_check_euler(const ProductRecord& record);
GrowthVerdict growth_check_ratio(const ProductRecord& record);

// Runs the growth check at every prime step up to x_max (the record is
// constant between primes, so prime steps cover all x). Returns the first x
// whose verdict fails, or nullopt when every step passes.
std::optional<std::uint64_t> growth_scan(ProductKind kind, unsigned s,
                                         std::uint64_t x_max,
                                         const PrimeTable& table);

}  // namespace pibound
