#pragma once

#include "pibound/rational.hpp"

#include <cstdint>
#include <vector>

namespace pibound {

// Bernoulli numbers B_0 .. B_max under the B_1 = -1/2 convention, computed
// eagerly from the defining recurrence and immutable afterwards.
class BernoulliCache {
 public:
  static constexpr unsigned kDefaultMax = 400;

  explicit BernoulliCache(unsigned max_m = kDefaultMax);

  // B_m; throws std::out_of_range for m > max_index().
  const Rational& at(unsigned m) const;
  unsigned max_index() const { return static_cast<unsigned>(values_.size()) - 1; }

 private:
  std::vector<Rational> values_;
};

// r with zeta(2n) = r * pi^(2n), n >= 1. Exact.
Rational zeta_even_coefficient(unsigned n, const BernoulliCache& cache);

// zeta(2n)^2 / zeta(4n), n >= 1. The pi powers cancel, leaving a rational.
Rational zeta_ratio_exact(unsigned n, const BernoulliCache& cache);

// Enclosure of zeta(s) for integer s >= 2: an exact partial sum over
// n <= terms plus an integral bracket for the tail. terms >= 2 required.
RationalInterval zeta_interval(unsigned s, std::uint64_t terms);

// Smallest term count whose zeta_interval width is <= target (target > 0).
std::uint64_t zeta_terms_for_width(unsigned s, const Rational& target);

// Limit of the odd-character cubic product: 1/2.
Rational l_chi4_target();

}  // namespace pibound
