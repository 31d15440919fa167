#include <doctest.h>

#include "pibound/bounds.hpp"

using namespace pibound;

namespace {

const PrimeTable& table() {
  static PrimeTable t = PrimeTable::build(20'000);
  return t;
}

const RationalInterval& zeta2() {
  static RationalInterval z = zeta_interval(2, 10'000);
  return z;
}

RationalInterval window(const char* lo, const char* hi) {
  return RationalInterval(parse_rational(lo), parse_rational(hi));
}

IrrationalityParams params(const Rational& mu, const Rational& eps) {
  IrrationalityParams p;
  p.mu = mu;
  p.eps = eps;
  return p;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(params(2, Rational(1, 10)).validate());
  CHECK_NOTHROW(params(1, Rational(1, 10)).validate());
  CHECK_NOTHROW(params(Rational(5, 2), 0).validate());
  CHECK_THROWS_AS(params(Rational(3, 2), Rational(1, 10)).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(params(0, Rational(1, 10)).validate(), std::invalid_argument);
  CHECK_THROWS_AS(params(2, Rational(-1, 10)).validate(), std::invalid_argument);
  CHECK(params(2, Rational(1, 10)).exponent() == Rational(21, 10));
}

TEST_CASE("tail bounds are the stated rationals") {
  CHECK(euler_tail_bound(2, 10) == Rational(1, 10));
  CHECK(euler_tail_bound(4, 10) == Rational(1, 3000));
  CHECK(euler_tail_bound(2, 1) == 1);
  CHECK(ratio_tail_bound(1, 10) == Rational(1, 5));
  CHECK(ratio_tail_bound(2, 10) == Rational(1, 1500));
  CHECK(ratio_tail_bound(1, 1) == 2);
  CHECK_THROWS_AS(euler_tail_bound(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(euler_tail_bound(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(ratio_tail_bound(0, 10), std::invalid_argument);
}

TEST_CASE("measure gap lower bounds") {
  MeasureGap g = measure_gap(2, params(2, 0));
  CHECK(g.value == Rational(1, 4));
  CHECK(g.exact);

  MeasureGap mid = measure_gap(325, params(1, Rational(1, 10)));
  CHECK(mid.value == Rational(1, 580));
  CHECK_FALSE(mid.exact);

  MeasureGap q1 = measure_gap(1, params(2, Rational(1, 10)));
  CHECK(q1.value == 1);
  CHECK(q1.exact);

  MeasureGap pow2 = measure_gap(1024, params(2, Rational(1, 10)));
  CHECK(pow2.value == Rational(1, 2'097'152));  // 1024^(21/10) = 2^21 exactly
  CHECK(pow2.exact);

  MeasureGap two = measure_gap(2, params(2, Rational(1, 10)));
  CHECK(two.value == Rational(1, 5));  // 2^2.1 = 4.287..., so 1/5 bounds below
  CHECK_FALSE(two.exact);

  MeasureGap integer_exp = measure_gap(3, params(2, 1));
  CHECK(integer_exp.value == Rational(1, 27));
  CHECK(integer_exp.exact);

  // huge denominator of the exponent: falls back to the integer ceiling
  MeasureGap coarse = measure_gap(2, params(2, Rational(1, 100)));
  CHECK(coarse.value == Rational(1, 8));
  CHECK_FALSE(coarse.exact);

  CHECK_THROWS_AS(measure_gap(0, params(2, Rational(1, 10))),
                  std::invalid_argument);

  // antitone in q
  Rational prev = measure_gap(10, params(2, Rational(1, 10))).value;
  for (unsigned long q = 11; q <= 40; ++q) {
    Rational cur = measure_gap(Int(q), params(2, Rational(1, 10))).value;
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("euler difference bound at pinned points") {
  DiffReport d = verify_diff_euler(2, 10, 10'000, table());
  CHECK(d.verdict == Verdict::holds);
  CHECK(window("0.019011", "0.019012").contains(d.lhs));
  CHECK(window("0.060792", "0.060793").contains(d.rhs));
  CHECK(d.slack > 0);
  CHECK(d.slack == d.rhs.lo - d.lhs.hi);

  CHECK(verify_diff_euler(4, 10, 100, table()).verdict == Verdict::holds);
  CHECK(verify_diff_euler(2, 10'000, 10'000, table()).verdict == Verdict::holds);
}

TEST_CASE("ratio difference bound is exact") {
  DiffReport d5 = verify_diff_ratio(5, 1, table());
  CHECK(d5.verdict == Verdict::holds);
  CHECK(d5.lhs.width() == 0);
  CHECK(d5.lhs.lo == Rational(14, 325));
  CHECK(d5.rhs.lo == Rational(1, 5));
  CHECK(d5.min_c4 == Rational(14, 65));
  CHECK(d5.slack == Rational(51, 325));

  DiffReport d2 = verify_diff_ratio(2, 1, table());
  CHECK(d2.min_c4 == Rational(2, 5));
  CHECK(d2.verdict == Verdict::holds);

  DiffReport starved = verify_diff_ratio(2, Rational(1, 10), table());
  CHECK(starved.verdict == Verdict::fails);
  CHECK(starved.min_c4 == Rational(2, 5));

  CHECK_THROWS_AS(verify_diff_ratio(2, Rational(0), table()),
                  std::invalid_argument);
}

TEST_CASE("count lower bounds land in pinned windows") {
  RationalInterval be =
      pi_lower_bound_euler(2, 100, params(2, Rational(1, 10)), zeta2());
  CHECK(window("6.5056599", "6.5056601").contains(be));
  CHECK(be.width() < Rational(1, 10'000'000));

  RationalInterval br = pi_lower_bound_ratio(100, params(1, Rational(1, 10)), 1);
  CHECK(window("8.0398692", "8.0398693").contains(br));
  RationalInterval br10 = pi_lower_bound_ratio(10, params(1, Rational(1, 10)), 1);
  CHECK(window("5.0199346", "5.0199347").contains(br10));
}

TEST_CASE("exponentiated theorem check, euler form") {
  IrrationalityParams p = params(2, Rational(1, 10));
  CHECK(theorem_check_euler(2, 100, 25, p, zeta2()) == Verdict::holds);
  CHECK(theorem_check_euler(2, 10, 4, p, zeta2()) == Verdict::fails);
  CHECK(theorem_check_euler(2, 11, 5, p, zeta2()) == Verdict::holds);
  CHECK(theorem_check_euler(2, 12, 5, p, zeta2()) == Verdict::fails);

  // an enclosure too wide to decide x = 11 must admit it
  RationalInterval sloppy(Rational(1), Rational(3));
  CHECK(theorem_check_euler(2, 11, 5, p, sloppy) == Verdict::indeterminate);
}

TEST_CASE("exponentiated theorem check, ratio form") {
  IrrationalityParams p = params(1, Rational(1, 10));
  CHECK(theorem_check_ratio(13, 6, p, 1) == Verdict::holds);
  CHECK(theorem_check_ratio(12, 5, p, 1) == Verdict::fails);
  CHECK(theorem_check_ratio(2, 1, p, 1) == Verdict::fails);
  CHECK(theorem_check_ratio(1'000, 168, p, 1) == Verdict::holds);
}

TEST_CASE("euler chain at a comfortable point") {
  ChainOptions opt;
  BoundReport rep = verify_chain_euler(2, 1'000, opt, table());
  CHECK(rep.chain == ProductKind::euler);
  CHECK(rep.pi_x == 168);
  CHECK(rep.terms == 10'000);  // auto-resolved for width 1e-8
  REQUIRE(rep.links.size() == 4);
  CHECK(rep.links[0].name == "growth");
  CHECK(rep.links[1].name == "measure-gap");
  CHECK(rep.links[2].name == "difference");
  CHECK(rep.links[3].name == "theorem");
  CHECK(rep.all_links_hold());
  CHECK(rep.theorem == Verdict::holds);
  CHECK(window("8.0875304", "8.0875306").contains(rep.bound));
  CHECK(Rational(rep.pi_x) >= rep.bound.hi);
  for (const auto& link : rep.links) CHECK(link.verdict == Verdict::holds);
}

TEST_CASE("euler chain reports failures without throwing") {
  ChainOptions opt;
  BoundReport rep = verify_chain_euler(2, 4, opt, table());
  CHECK(rep.theorem == Verdict::fails);
  CHECK_FALSE(rep.all_links_hold());
  CHECK(rep.links[0].verdict == Verdict::holds);  // growth still fine at x=4
  CHECK(rep.links[1].verdict == Verdict::holds);
  BoundReport rep10 = verify_chain_euler(2, 10, opt, table());
  CHECK(rep10.theorem == Verdict::fails);
  CHECK(rep10.links[2].verdict == Verdict::holds);  // difference holds at 10
}

TEST_CASE("euler chain accepts a shared zeta enclosure") {
  ChainOptions opt;
  opt.terms = 10'000;
  BoundReport a = verify_chain_euler(2, 1'000, opt, table());
  BoundReport b = verify_chain_euler(2, 1'000, opt, table(), zeta2());
  CHECK(a.bound.lo == b.bound.lo);
  CHECK(a.bound.hi == b.bound.hi);
  CHECK(a.links[3].verdict == b.links[3].verdict);
}

TEST_CASE("ratio chain at a comfortable point") {
  ChainOptions opt;
  opt.params = params(1, Rational(1, 10));
  BoundReport rep = verify_chain_ratio(1'000, opt, table());
  REQUIRE(rep.links.size() == 5);
  CHECK(rep.links[0].name == "growth");
  CHECK(rep.links[1].name == "measure-gap");
  CHECK(rep.links[2].name == "difference");
  CHECK(rep.links[3].name == "tail-bound");
  CHECK(rep.links[4].name == "theorem");
  CHECK(rep.all_links_hold());
  CHECK(window("11.0598038", "11.0598040").contains(rep.bound));
  CHECK(rep.pi_x == 168);
  CHECK(rep.c4 == 1);
  CHECK(rep.safety == 2);
}

TEST_CASE("chain dispatch and option guards") {
  ChainOptions opt;
  BoundReport via = verify_chain(ProductKind::euler, 2, 1'000, opt, table());
  CHECK(via.chain == ProductKind::euler);
  ChainOptions ropt;
  ropt.params = params(1, Rational(1, 10));
  BoundReport rvia = verify_chain(ProductKind::ratio, 1, 1'000, ropt, table());
  CHECK(rvia.chain == ProductKind::ratio);
  CHECK_THROWS_AS(verify_chain(ProductKind::l_chi4, 1, 100, opt, table()),
                  std::invalid_argument);

  ChainOptions eps0;
  eps0.params = params(2, 0);
  CHECK_THROWS_AS(verify_chain_euler(2, 100, eps0, table()),
                  std::invalid_argument);
  ChainOptions bad_c4;
  bad_c4.params = params(1, Rational(1, 10));
  bad_c4.c4 = 0;
  CHECK_THROWS_AS(verify_chain_ratio(100, bad_c4, table()),
                  std::invalid_argument);
  ChainOptions bad_safety;
  bad_safety.params = params(1, Rational(1, 10));
  bad_safety.safety = Rational(1, 2);
  CHECK_THROWS_AS(verify_chain_ratio(100, bad_safety, table()),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_chain_euler(1, 100, opt, table()),
                  std::invalid_argument);
}

TEST_CASE("euler theorem scan pins the violation set") {
  TheoremScan scan =
      theorem_scan_euler(2, 300, params(2, Rational(1, 10)), zeta2(), table());
  std::vector<std::uint64_t> expect{2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
  CHECK(scan.violations == expect);
  CHECK(scan.indeterminate.empty());
  CHECK(scan.first_safe_x == 13);
  CHECK(scan.clean_from(13));
  CHECK_FALSE(scan.clean_from(12));
}

TEST_CASE("ratio theorem scan pins the violation set") {
  TheoremScan scan =
      theorem_scan_ratio(300, params(1, Rational(1, 10)), 1, table());
  std::vector<std::uint64_t> expect{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  CHECK(scan.violations == expect);
  CHECK(scan.indeterminate.empty());
  CHECK(scan.first_safe_x == 13);
}

TEST_CASE("scan surfaces indeterminate points under a sloppy enclosure") {
  RationalInterval sloppy(Rational(1), Rational(3));
  TheoremScan scan =
      theorem_scan_euler(2, 100, params(2, Rational(1, 10)), sloppy, table());
  CHECK_FALSE(scan.indeterminate.empty());
  CHECK(scan.first_safe_x > 11);

  CHECK_THROWS_AS(theorem_scan_euler(2, table().limit() + 1,
                                     params(2, Rational(1, 10)), zeta2(),
                                     table()),
                  std::out_of_range);
}
