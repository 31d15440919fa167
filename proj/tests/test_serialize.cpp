#include <doctest.h>

#include "pibound/serialize.hpp"

using namespace pibound;

namespace {

const PrimeTable& table() {
  static PrimeTable t = PrimeTable::build(20'000);
  return t;
}

}  // namespace

TEST_CASE("product records round trip through json bit for bit") {
  for (ProductRecord r : {euler_partial(2, 1000, table()),
                          ratio_partial(1, 577, table()),
                          l_chi4_partial(101, table()),
                          euler_partial(3, 1, table())}) {
    Json j = to_json(r);
    ProductRecord back = product_record_from_json(Json::parse(j.dump()));
    CHECK(back.kind == r.kind);
    CHECK(back.s == r.s);
    CHECK(back.x == r.x);
    CHECK(back.pi_x == r.pi_x);
    CHECK(back.fraction == r.fraction);
    CHECK(back.v2_raw_num == r.v2_raw_num);
    CHECK(back.v2_raw_den == r.v2_raw_den);
    CHECK(back.empty_product == r.empty_product);
  }
}

TEST_CASE("product json carries exact strings, not floats") {
  ProductRecord r = euler_partial(2, 10, table());
  Json j = to_json(r);
  CHECK(j["fraction"] == "768/1225");
  CHECK(j["fraction"].is_string());
  CHECK(j["fraction_decimal"].is_string());
  CHECK(j["kind"] == "euler");
  CHECK(j["x"] == 10);
  CHECK(j["pi_x"] == 4);
  CHECK(j["v2_raw_numerator"] == 10);
  CHECK(j["v2_raw_denominator"] == 2);
  CHECK(j["fraction_decimal"] ==
        decimal_string(Rational(768, 1225), 20));
  for (const auto& [key, value] : j.items()) {
    CAPTURE(key);
    CHECK_FALSE(value.is_number_float());
  }
}

TEST_CASE("malformed product json is rejected") {
  Json good = to_json(euler_partial(2, 10, table()));
  Json missing = good;
  missing.erase("fraction");
  CHECK_THROWS_AS(product_record_from_json(missing), std::invalid_argument);
  Json bad_kind = good;
  bad_kind["kind"] = "elephant";
  CHECK_THROWS_AS(product_record_from_json(bad_kind), std::invalid_argument);
  Json bad_fraction = good;
  bad_fraction["fraction"] = "1/0";
  CHECK_THROWS_AS(product_record_from_json(bad_fraction), std::invalid_argument);
}

TEST_CASE("factorization json") {
  Factorization f = factorize(360);
  Json j = to_json(f);
  CHECK(j["n"] == "360");
  REQUIRE(j["factors"].size() == 3);
  CHECK(j["factors"][0]["prime"] == "2");
  CHECK(j["factors"][0]["exponent"] == 3);
  CHECK(j["factors"][0]["certified"] == true);
  CHECK(j["cofactor"] == "1");
  CHECK(j["complete"] == true);
}

TEST_CASE("bound report json shape") {
  ChainOptions opt;
  BoundReport rep = verify_chain_euler(2, 1000, opt, table());
  Json j = to_json(rep);
  CHECK(j["chain"] == "euler");
  CHECK(j["s"] == 2);
  CHECK(j["x"] == 1000);
  CHECK(j["pi_x"] == 168);
  CHECK(j["mu"] == "2");
  CHECK(j["eps"] == "1/10");
  CHECK(j["terms"] == 10000);
  CHECK_FALSE(j.contains("c4"));  // euler chain has no c4 knob
  REQUIRE(j["links"].size() == 4);
  CHECK(j["links"][0]["name"] == "growth");
  CHECK(j["links"][0]["verdict"] == "holds");
  CHECK(j["links"][3]["name"] == "theorem");
  CHECK(j["bound"].contains("lo"));
  CHECK(j["bound"].contains("hi_decimal"));
  CHECK(j["theorem"] == "holds");
  CHECK(j["all_links_hold"] == true);
  for (const auto& link : j["links"]) {
    CHECK(link["slack"].is_string());
    CHECK(link["slack_decimal"].is_string());
  }

  ChainOptions ropt;
  ropt.params.mu = 1;
  BoundReport rrep = verify_chain_ratio(1000, ropt, table());
  Json rj = to_json(rrep);
  CHECK(rj["c4"] == "1");
  CHECK(rj["safety"] == "2");
  CHECK_FALSE(rj.contains("terms"));
  CHECK(rj["links"].size() == 5);
}

TEST_CASE("sequence and harmonic json") {
  Json e = to_json(euclid_term(6));
  CHECK(e["index"] == 6);
  CHECK(e["source"] == "721");
  CHECK(e["source_digits"] == 3);
  CHECK(e["extracted"] == "103");
  CHECK(e["complete"] == true);
  CHECK(e["paper_match"] == "match");
  CHECK(e["factorization"]["factors"].size() == 2);

  Json h = to_json(prime_harmonic_sum(10, table()));
  CHECK(h["x"] == 10);
  CHECK(h["sum"] == "247/210");
  CHECK(h["sum_decimal"].is_string());
  CHECK(h["loglog"].contains("lo"));
  CHECK(h["drift"].contains("hi_decimal"));
}

TEST_CASE("interval json uses exact endpoints plus decimals") {
  RationalInterval v(Rational(1, 3), Rational(1, 2));
  Json j = interval_to_json(v);
  CHECK(j["lo"] == "1/3");
  CHECK(j["hi"] == "1/2");
  CHECK(j["lo_decimal"] == decimal_string(Rational(1, 3), 20));
  CHECK(j["hi_decimal"] == decimal_string(Rational(1, 2), 20));
}

TEST_CASE("csv escaping") {
  CHECK(csv_line({"a", "b", "c"}) == "a,b,c\n");
  CHECK(csv_line({"a,b", "c"}) == "\"a,b\",c\n");
  CHECK(csv_line({"say \"hi\""}) == "\"say \"\"hi\"\"\"\n");
  CHECK(csv_line({"line\nbreak"}) == "\"line\nbreak\"\n");
  CHECK(csv_line({}) == "\n");
}

TEST_CASE("table rendering") {
  std::string out = render_table({"x", "value"}, {{"10", "3/4"}, {"1000", "768/1225"}});
  CHECK(out.find("x") != std::string::npos);
  CHECK(out.find("768/1225") != std::string::npos);
  // header, rule, two rows
  CHECK(std::count(out.begin(), out.end(), '\n') == 4);
  // rule line is dashes
  auto first_nl = out.find('\n');
  auto second_nl = out.find('\n', first_nl + 1);
  std::string rule = out.substr(first_nl + 1, second_nl - first_nl - 1);
  CHECK(rule.find_first_not_of("- ") == std::string::npos);
}

TEST_CASE("cell layouts stay in sync with their headers") {
  CHECK(product_cells(euler_partial(2, 10, table())).size() ==
        product_columns().size());
  ChainOptions opt;
  CHECK(bound_cells(verify_chain_euler(2, 100, opt, table())).size() ==
        bound_columns().size());
  CHECK(sequence_cells(euclid_term(5)).size() == sequence_columns().size());
  CHECK(harmonic_cells(prime_harmonic_sum(10, table())).size() ==
        harmonic_columns().size());
}

TEST_CASE("json dumps are deterministic") {
  Json a = to_json(euler_partial(2, 500, table()));
  Json b = to_json(euler_partial(2, 500, table()));
  CHECK(a.dump() == b.dump());
}
