#pragma once

#include "pibound/enclosure.hpp"
#include "pibound/primes.hpp"
#include "pibound/rational.hpp"

#include <cstdint>
#include <vector>

namespace pibound {

// Relation of a computed term to the printed reference list it is diffed
// against. A mismatch is reported, never treated as a mathematical failure:
// ground truth is the factorization.
enum class PaperMatch { match, mismatch, not_listed };

const char* to_string(PaperMatch m);

struct SequenceTerm {
  std::uint64_t index = 0;  // n (factorial sequence) or k (prime index)
  Int source = 1;           // n!+1 or (p-1)!+1
  Factorization factorization;
  Int extracted = 1;        // largest (euclid) or smallest (hermite) prime factor
  bool complete = true;     // extraction certain, not budget-limited
  PaperMatch paper_match = PaperMatch::not_listed;
};

// Largest prime factor of n!+1. A blown factoring budget yields
// complete=false and the largest certified prime found so far.
SequenceTerm euclid_term(std::uint64_t n, const FactorEffort& effort = {});

// Smallest prime factor of (p_k - 1)! + 1 where p_k is the k-th prime.
// Computed without factoring: primes q <= p_k - 1 divide (p_k - 1)!, so none
// divides the source, while p_k divides it by Wilson's congruence
// (p-1)! = -1 mod p, which is re-verified by a modular factorial. A failed
// congruence throws std::logic_error (it would mean broken arithmetic).
SequenceTerm hermite_term(std::size_t k, const PrimeTable& table);

// Printed reference lists the terms are diffed against.
const std::vector<Int>& euclid_reference_list();
const std::vector<Int>& hermite_reference_list();

// Exact sum_{p<=x} 1/p with its drift from ln ln x.
struct HarmonicPoint {
  std::uint64_t x = 0;
  Rational sum;
  RationalInterval loglog;
  RationalInterval drift;  // sum - loglog
};

// x >= 3 so that ln ln x is positive.
HarmonicPoint prime_harmonic_sum(std::uint64_t x, const PrimeTable& table);

}  // namespace pibound
