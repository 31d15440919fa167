#include "pibound/sequences.hpp"

#include <stdexcept>

namespace pibound {

const char* to_string(PaperMatch m) {
  switch (m) {
    case PaperMatch::match: return "match";
    case PaperMatch::mismatch: return "mismatch";
    default: return "not-listed";
  }
}

const std::vector<Int>& euclid_reference_list() {
  static const std::vector<Int> list = {
      2,  3,  7,      5,        11, 103,
      71, 61, 661,    19,       269,
      329891, 39916801, 13, 83};
  return list;
}

const std::vector<Int>& hermite_reference_list() {
  static const std::vector<Int> list = {2,  3,  5,  7,  11, 13, 17,
                                        19, 23, 29, 31, 37, 41, 43};
  return list;
}

namespace {

PaperMatch diff_against(const std::vector<Int>& list, std::uint64_t index,
                        const Int& extracted) {
  if (index == 0 || index > list.size()) return PaperMatch::not_listed;
  return list[index - 1] == extracted ? PaperMatch::match : PaperMatch::mismatch;
}

}  // namespace

SequenceTerm euclid_term(std::uint64_t n, const FactorEffort& effort) {
  if (n < 1) throw std::invalid_argument("euclid term index starts at 1");
  SequenceTerm term;
  term.index = n;
  mpz_fac_ui(term.source.get_mpz_t(), static_cast<unsigned long>(n));
  term.source += 1;
  term.factorization = factorize(term.source, effort);
  term.complete = term.factorization.complete;
  if (term.complete) {
    term.extracted = *term.factorization.largest_prime();
  } else {
    // Budget ran out: fall back to the largest certified prime seen.
    term.extracted = 1;
    for (const FactorEntry& f : term.factorization.factors)
      if (f.certified && f.prime > term.extracted) term.extracted = f.prime;
  }
  term.paper_match = diff_against(euclid_reference_list(), n, term.extracted);
  return term;
}

SequenceTerm hermite_term(std::size_t k, const PrimeTable& table) {
  std::uint64_t p = table.nth(k);
  if (p > 2'000'000)
    throw std::invalid_argument("factorial source beyond desk scale");

  // Wilson safety net: (p-1)! mod p must be p-1. Products stay below 2^64
  // since p < 2^32.
  std::uint64_t acc = 1;
  for (std::uint64_t m = 2; m < p; ++m) acc = acc * m % p;
  if (acc != p - 1)
    throw std::logic_error("Wilson congruence failed for a prime input");

  SequenceTerm term;
  term.index = k;
  mpz_fac_ui(term.source.get_mpz_t(), static_cast<unsigned long>(p - 1));
  term.source += 1;
  term.extracted = Int(static_cast<unsigned long>(p));
  term.complete = true;  // no prime <= p-1 divides (p-1)!+1, so p is minimal

  Factorization f;
  f.n = term.source;
  FactorEntry entry;
  entry.prime = term.extracted;
  entry.certified = true;
  Int rest = term.source;
  while (mpz_divisible_p(rest.get_mpz_t(), entry.prime.get_mpz_t())) {
    rest /= entry.prime;
    ++entry.exponent;
  }
  f.factors.push_back(entry);
  f.cofactor = rest;
  f.complete = (rest == 1);
  f.certified = true;
  term.factorization = std::move(f);

  term.paper_match = diff_against(hermite_reference_list(), k, term.extracted);
  return term;
}

namespace {

struct RawSum {
  Int num;
  Int den;
};

// sum of 1/primes[i] over i in [a, b], balanced split, one reduction at the
// caller.
RawSum reciprocal_sum(const std::vector<std::uint64_t>& primes, std::size_t a,
                      std::size_t b) {
  if (a == b) return {Int(1), Int(static_cast<unsigned long>(primes[a]))};
  std::size_t mid = a + (b - a) / 2;
  RawSum left = reciprocal_sum(primes, a, mid);
  RawSum right = reciprocal_sum(primes, mid + 1, b);
  return {left.num * right.den + right.num * left.den, left.den * right.den};
}

}  // namespace

HarmonicPoint prime_harmonic_sum(std::uint64_t x, const PrimeTable& table) {
  if (x < 3) throw std::invalid_argument("harmonic comparison requires x >= 3");
  std::uint64_t count = table.count_leq(x);
  HarmonicPoint point;
  point.x = x;
  RawSum raw = reciprocal_sum(table.primes(), 0, count - 1);
  point.sum = make_rational(raw.num, raw.den);
  point.loglog = loglog_enclosure(Rational(static_cast<unsigned long>(x)));
  point.drift = RationalInterval(point.sum) - point.loglog;
  return point;
}

}  // namespace pibound
