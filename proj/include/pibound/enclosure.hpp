#pragma once

#include "pibound/rational.hpp"

namespace pibound {

// Rational enclosures of natural logarithms. All arithmetic is exact; no
// binary floating point is involved, so the returned interval provably
// contains the target value.
//
// Method: reduce v = 2^m * u with u in [1,2), then
//   ln u = 2 * sum_{j>=0} z^(2j+1)/(2j+1),  z = (u-1)/(u+1) in [0, 1/3],
// truncated after `terms` terms with the geometric tail bounded explicitly.
// Inputs are first rounded outward onto a dyadic grid so series terms keep
// bounded representations regardless of how bulky the input rational is.

// ln v for v > 0. Throws std::domain_error for v <= 0.
RationalInterval log_enclosure(const Rational& v, unsigned terms = 40);

// ln of every point of [v.lo, v.hi]; requires v.lo > 0.
RationalInterval log_enclosure(const RationalInterval& v, unsigned terms = 40);

// Enclosure of ln 2 (cached).
const RationalInterval& log2_enclosure();

// ln ln x for x with ln x > 0 throughout (x > 1 suffices since lo > 1 checked).
RationalInterval loglog_enclosure(const Rational& x, unsigned terms = 40);

}  // namespace pibound
