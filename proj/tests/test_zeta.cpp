#include <doctest.h>

#include "oracle.hpp"
#include "pibound/zeta.hpp"

using namespace pibound;

namespace {

const BernoulliCache& cache() {
  static BernoulliCache c(200);
  return c;
}

RationalInterval window(const char* lo, const char* hi) {
  return RationalInterval(parse_rational(lo), parse_rational(hi));
}

}  // namespace

TEST_CASE("Bernoulli numbers match the transform oracle") {
  auto expect = oracle::bernoulli_plus(60);
  for (unsigned m = 0; m <= 60; ++m) {
    CAPTURE(m);
    if (m == 1)
      CHECK(cache().at(m) == -expect[m]);  // opposite sign convention at 1
    else
      CHECK(cache().at(m) == expect[m]);
  }
}

TEST_CASE("Bernoulli reference values and cache bounds") {
  CHECK(cache().at(0) == 1);
  CHECK(cache().at(1) == Rational(-1, 2));
  CHECK(cache().at(2) == Rational(1, 6));
  CHECK(cache().at(3) == 0);
  CHECK(cache().at(4) == Rational(-1, 30));
  CHECK(cache().at(5) == 0);
  CHECK(cache().at(12) == Rational(-691, 2730));
  CHECK(cache().max_index() == 200);
  CHECK_THROWS_AS(cache().at(201), std::out_of_range);
  BernoulliCache small(10);
  CHECK(small.max_index() == 10);
  CHECK(small.at(10) == Rational(5, 66));
}

TEST_CASE("even zeta coefficients") {
  CHECK(zeta_even_coefficient(1, cache()) == Rational(1, 6));
  CHECK(zeta_even_coefficient(2, cache()) == Rational(1, 90));
  CHECK(zeta_even_coefficient(3, cache()) == Rational(1, 945));
  CHECK(zeta_even_coefficient(4, cache()) == Rational(1, 9450));
  CHECK(zeta_even_coefficient(5, cache()) == Rational(1, 93555));
  // positivity is not a coincidence: every even zeta value is positive
  for (unsigned n = 1; n <= 50; ++n) CHECK(zeta_even_coefficient(n, cache()) > 0);
  CHECK_THROWS_AS(zeta_even_coefficient(0, cache()), std::invalid_argument);
  CHECK_THROWS_AS(zeta_even_coefficient(101, cache()), std::out_of_range);
}

TEST_CASE("exact zeta ratio and its coefficient identity") {
  CHECK(zeta_ratio_exact(1, cache()) == Rational(5, 2));
  CHECK(zeta_ratio_exact(2, cache()) == Rational(7, 6));
  for (unsigned n = 1; n <= 50; ++n) {
    Rational lhs = zeta_ratio_exact(n, cache());
    Rational c_n = zeta_even_coefficient(n, cache());
    Rational c_2n = zeta_even_coefficient(2 * n, cache());
    CAPTURE(n);
    CHECK(lhs == c_n * c_n / c_2n);
    CHECK(lhs > 1);  // zeta(2n)^2 > zeta(4n) since zeta decreases to 1
  }
  CHECK_THROWS_AS(zeta_ratio_exact(0, cache()), std::invalid_argument);
  CHECK_THROWS_AS(zeta_ratio_exact(51, cache()), std::out_of_range);
}

TEST_CASE("zeta interval brackets with the exact pinned tail") {
  RationalInterval z = zeta_interval(2, 10);
  Rational partial(1968329, 1270080);
  CHECK(z.lo == partial + Rational(1, 11));
  CHECK(z.hi == partial + Rational(1, 10));
  CHECK(z.contains(parse_rational("1.6449340668482264")));
}

TEST_CASE("narrow zeta intervals land inside decimal windows") {
  RationalInterval z2 = zeta_interval(2, 10'000);
  CHECK(z2.width() <= Rational(1, pow_int(10, 8)));
  CHECK(window("1.64493405", "1.64493408").contains(z2));

  RationalInterval z3 = zeta_interval(3, 2'000);
  CHECK(window("1.20205665", "1.20205715").contains(z3));
  CHECK(z3.contains(parse_rational("1.20205690315959428")));

  RationalInterval z4 = zeta_interval(4, 300);
  CHECK(window("1.0823232325", "1.0823232349").contains(z4));
}

TEST_CASE("zeta enclosures are consistent with the pi oracle") {
  RationalInterval pi_b = oracle::pi_bracket();
  RationalInterval pi2 = pi_b * pi_b;
  RationalInterval from_pi2 = zeta_even_coefficient(1, cache()) * pi2;
  RationalInterval direct2 = zeta_interval(2, 2'000);
  // both enclose the same number, so they must intersect
  CHECK(from_pi2.lo <= direct2.hi);
  CHECK(direct2.lo <= from_pi2.hi);

  RationalInterval pi4 = pi2 * pi2;
  RationalInterval from_pi4 = zeta_even_coefficient(2, cache()) * pi4;
  RationalInterval direct4 = zeta_interval(4, 200);
  CHECK(from_pi4.lo <= direct4.hi);
  CHECK(direct4.lo <= from_pi4.hi);
}

TEST_CASE("term counts needed for a width target") {
  CHECK(zeta_terms_for_width(2, Rational(1, pow_int(10, 8))) == 10'000);
  CHECK(zeta_terms_for_width(2, Rational(1, 100)) == 10);
  CHECK(zeta_terms_for_width(4, Rational(1, pow_int(10, 8))) == 100);
  // returned count is minimal: one less must overshoot the target
  for (unsigned s : {2u, 3u, 5u}) {
    std::uint64_t t = zeta_terms_for_width(s, Rational(1, 1'000'000));
    CAPTURE(s);
    CHECK(zeta_interval(s, t).width() <= Rational(1, 1'000'000));
    CHECK(zeta_interval(s, t - 1).width() > Rational(1, 1'000'000));
  }
  CHECK_THROWS_AS(zeta_terms_for_width(2, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(zeta_terms_for_width(1, Rational(1, 10)), std::invalid_argument);
}

TEST_CASE("zeta interval argument guards") {
  CHECK_THROWS_AS(zeta_interval(1, 100), std::invalid_argument);
  CHECK_THROWS_AS(zeta_interval(2, 1), std::invalid_argument);
}

TEST_CASE("l_chi4 target") { CHECK(l_chi4_target() == Rational(1, 2)); }
