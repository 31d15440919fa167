#include "pibound/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace pibound {
namespace {

constexpr std::uint64_t kSegmentSize = 1u << 20;

std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

// First 13 primes certify primality below this bound (Sorenson-Webster).
const Int& deterministic_witness_bound() {
  static const Int bound("3317044064679887385961981");
  return bound;
}

constexpr std::array<unsigned, 13> kWitnesses = {2,  3,  5,  7,  11, 13, 17,
                                                 19, 23, 29, 31, 37, 41};

bool miller_rabin_witness(const Int& n, const Int& base, const Int& d, unsigned long r) {
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool miller_rabin(const Int& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int d = n - 1;
  unsigned long r = two_adic_valuation(d);
  d >>= r;
  if (n < deterministic_witness_bound()) {
    for (unsigned w : kWitnesses)
      if (!miller_rabin_witness(n, Int(w), d, r)) return false;
    return true;
  }
  // Probable-prime regime: fixed witnesses plus bases seeded from n itself,
  // so the answer is deterministic per input.
  for (unsigned w : kWitnesses)
    if (!miller_rabin_witness(n, Int(w), d, r)) return false;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(n);
  for (int round = 0; round < 40; ++round) {
    Int base = rng.get_z_range(n - 3) + 2;  // in [2, n-2]
    if (!miller_rabin_witness(n, base, d, r)) return false;
  }
  return true;
}

// Pollard-Brent cycle finding with batched gcds. Returns a nontrivial factor
// or zero when the round budget/deadline runs out. Deterministic: parameters
// advance on a fixed schedule.
Int pollard_brent(const Int& n, unsigned rounds,
                  std::chrono::steady_clock::time_point deadline) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned round = 0; round < rounds; ++round) {
    const Int c = 1 + round;       // x^2 + c
    Int y = 2 + round, g = 1, q = 1, x, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        const unsigned long chunk = std::min(m, r - k);
        for (unsigned long i = 0; i < chunk; ++i) {
          y = (y * y + c) % n;
          q = q * (x > y ? x - y : y - x) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        if (std::chrono::steady_clock::now() > deadline) return 0;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        Int diff = x > ys ? x - ys : ys - x;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
    if (std::chrono::steady_clock::now() > deadline) return 0;
  }
  return 0;
}

}  // namespace

PrimeTable PrimeTable::build(std::uint64_t limit, std::uint64_t cap) {
  if (limit < 2 || limit > cap)
    throw std::out_of_range("prime table: limit must be in [2, " +
                            std::to_string(cap) + "], got " +
                            std::to_string(limit));
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<std::uint64_t> base = simple_sieve(root);
  std::vector<std::uint64_t> primes;
  primes.reserve(static_cast<std::size_t>(
      limit / std::max(1.0, std::log(static_cast<double>(limit)) - 1.1)));

  std::vector<char> segment(kSegmentSize);
  for (std::uint64_t low = 2; low <= limit; low += kSegmentSize) {
    const std::uint64_t high = std::min(low + kSegmentSize - 1, limit);
    std::fill(segment.begin(), segment.end(), 0);
    for (std::uint64_t p : base) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t j = start; j <= high; j += p) segment[j - low] = 1;
    }
    for (std::uint64_t v = low; v <= high; ++v)
      if (!segment[v - low]) primes.push_back(v);
  }
  return PrimeTable(limit, std::move(primes));
}

std::uint64_t PrimeTable::count_leq(std::uint64_t x) const {
  if (x > limit_)
    throw std::out_of_range("prime table: pi(" + std::to_string(x) +
                            ") beyond sieved limit " + std::to_string(limit_));
  auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
  return static_cast<std::uint64_t>(it - primes_.begin());
}

std::uint64_t PrimeTable::count_leq(double x) const {
  if (x < 2) return 0;
  return count_leq(static_cast<std::uint64_t>(std::floor(x)));
}

std::uint64_t PrimeTable::nth(std::size_t k) const {
  if (k == 0 || k > primes_.size())
    throw std::out_of_range("prime table: no " + std::to_string(k) +
                            "-th prime below " + std::to_string(limit_));
  return primes_[k - 1];
}

unsigned long two_adic_valuation(const Int& n) {
  if (n < 1) throw std::invalid_argument("two_adic_valuation: n must be >= 1");
  return mpz_scan1(n.get_mpz_t(), 0);
}

bool is_prime(const Int& n) { return miller_rabin(n); }

bool primality_is_certified(const Int& n) {
  return n < deterministic_witness_bound();
}

Int Factorization::reassemble() const {
  Int r = cofactor;
  for (const auto& f : factors) r *= pow_int(f.prime, f.exponent);
  return r;
}

const Int* Factorization::largest_prime() const {
  return factors.empty() ? nullptr : &factors.back().prime;
}

const Int* Factorization::smallest_prime() const {
  return factors.empty() ? nullptr : &factors.front().prime;
}

Factorization factorize(const Int& n, const FactorEffort& effort) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  out.n = n;
  if (n == 1) return out;

  const auto deadline = std::chrono::steady_clock::now() + effort.time_cap;
  Int rest = n;
  std::vector<std::pair<Int, unsigned>> found;

  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e > 0) found.emplace_back(p, e);
  };

  strip(Int(2));
  for (Int p = 3; p * p <= rest && p <= effort.trial_limit; p += 2) strip(p);
  const Int trial_sq = Int(effort.trial_limit) * Int(effort.trial_limit);
  if (rest > 1 && rest <= trial_sq) {
    // trial division exhausted candidates below sqrt(rest): rest is prime
    found.emplace_back(rest, 1);
    rest = 1;
  }

  // rho phase on the remaining (large) cofactor
  std::vector<Int> stack;
  if (rest > 1) stack.push_back(rest);
  rest = 1;
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (is_prime(m)) {
      found.emplace_back(m, 1);
      continue;
    }
    Int d = pollard_brent(m, effort.rho_rounds, deadline);
    if (d == 0) {
      out.complete = false;
      out.cofactor *= m;  // composite remainder, flagged
      continue;
    }
    stack.push_back(d);
    stack.push_back(m / d);
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!out.factors.empty() && out.factors.back().prime == found[i].first) {
      out.factors.back().exponent += found[i].second;
      continue;
    }
    FactorEntry e;
    e.prime = found[i].first;
    e.exponent = found[i].second;
    e.certified = primality_is_certified(e.prime);
    out.factors.push_back(std::move(e));
  }
  for (const auto& f : out.factors) out.certified = out.certified && f.certified;
  return out;
}

}  // namespace pibound
