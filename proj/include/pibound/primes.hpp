#pragma once

#include "pibound/rational.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

namespace pibound {

// Immutable list of all primes <= limit, built by a segmented sieve of
// Eratosthenes. Safe to share across threads after construction.
class PrimeTable {
 public:
  static constexpr std::uint64_t kDefaultCap = 100'000'000;

  // limit in [2, cap]; throws std::out_of_range otherwise.
  static PrimeTable build(std::uint64_t limit, std::uint64_t cap = kDefaultCap);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  // pi(x); throws std::out_of_range when x exceeds the sieved limit.
  std::uint64_t count_leq(std::uint64_t x) const;
  std::uint64_t count_leq(double x) const;

  // k-th prime, 1-based. Throws std::out_of_range past the table.
  std::uint64_t nth(std::size_t k) const;

 private:
  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
};

// Largest k with 2^k | n, for n >= 1.
unsigned long two_adic_valuation(const Int& n);

// Miller-Rabin primality. Deterministic (certifying) for n below the known
// 13-witness bound 3317044064679887385961981; above that, 40 rounds with
// bases derived deterministically from n.
bool is_prime(const Int& n);

// True when is_prime's answer for n is a certainty rather than
// probable-prime.
bool primality_is_certified(const Int& n);

struct FactorEffort {
  std::uint64_t trial_limit = 1'000'000;           // trial division bound
  unsigned rho_rounds = 64;                        // Pollard-Brent restarts
  std::chrono::milliseconds time_cap{60'000};
};

struct FactorEntry {
  Int prime;
  unsigned exponent = 0;
  bool certified = true;  // passed a certifying primality test
};

// Prime factorization, possibly partial: factors * cofactor == n always.
// complete == false means the budget ran out with a composite cofactor left.
struct Factorization {
  Int n = 1;
  std::vector<FactorEntry> factors;  // strictly increasing primes
  bool complete = true;
  bool certified = true;  // every listed prime certified
  Int cofactor = 1;       // 1 when complete

  Int reassemble() const;
  const Int* largest_prime() const;   // nullptr when no factors listed
  const Int* smallest_prime() const;
};

// Trial division up to effort.trial_limit, then Pollard-Brent rho on what
// remains. Never throws on budget exhaustion: the result carries the flag.
Factorization factorize(const Int& n, const FactorEffort& effort = {});

}  // namespace pibound
