#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ribbon/json_io.hpp"
#include "ribbon/random_gen.hpp"

using namespace ribbon;

TEST_CASE("rational strings round-trip") {
  for (const char* s : {"0", "1", "-1", "3/2", "-7/13", "100000000000000000001/3"}) {
    Rational q = rational_parse(s);
    CHECK(rational_parse(rational_str(q)) == q);
  }
  CHECK(rational_parse("4/2") == 2);
  CHECK_THROWS(rational_parse("1/0"));
  CHECK_THROWS(rational_parse("abc"));
}

TEST_CASE("laurent round-trip") {
  RandomGen g(601);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly p = g.laurent(-8, 8, 6);
    Json j = laurent_to_json(p);
    CHECK(laurent_from_json(j) == p);
    // serialized text re-parses identically
    CHECK(laurent_from_json(Json::parse(j.dump())) == p);
  }
}

TEST_CASE("truncated element and automorphism round-trip") {
  RandomGen g(602);
  for (int i = 0; i < 50; ++i) {
    int n = g.uniform(1, 5);
    TruncElem e = g.trunc(n);
    CHECK(trunc_from_json(trunc_to_json(e)) == e);
    if (n >= 2) {
      TruncAuto a = g.chart_auto(n, g.uniform(-3, 3));
      TruncAuto back = auto_from_json(auto_to_json(a));
      CHECK(back == a);
    }
  }
}

TEST_CASE("cochain round-trip") {
  RandomGen g(603);
  for (int i = 0; i < 40; ++i) {
    Twist t{g.uniform(-5, 5), g.uniform(-2, 2)};
    for (Cover cover : {Cover::two_charts, Cover::three_charts})
      for (int q = 0; q <= (cover == Cover::three_charts ? 2 : 1); ++q) {
        Cochain c = g.cochain(q, cover, t);
        Cochain back = cochain_from_json(cochain_to_json(c));
        CHECK(back == c);
      }
  }
}

TEST_CASE("scheme round-trip preserves validity and equality") {
  RandomGen g(604);
  for (int i = 0; i < 15; ++i) {
    MultiScheme X = g.scheme(g.uniform(-4, -1), g.uniform(1, 3));
    Json j = scheme_to_json(X);
    MultiScheme back = scheme_from_json(j);
    CHECK(schemes_equal(back, X));
    CHECK(validate_gluing(back).ok);
    CHECK(scheme_from_json(Json::parse(j.dump(2))).n == X.n);
  }
}

TEST_CASE("bundle round-trip") {
  RandomGen g(605);
  for (int i = 0; i < 10; ++i) {
    MultiScheme X = g.scheme(g.uniform(-3, -1), g.uniform(1, 3));
    BundleCocycle E = g.line_bundle(X, g.uniform(-2, 2));
    BundleCocycle back = bundle_from_json(bundle_to_json(E));
    CHECK(back.rank == E.rank);
    CHECK(validate_bundle(back).ok);
    CHECK(line_bundle_iso(back, E).isomorphic);
  }
}

TEST_CASE("malformed input is rejected with invalid_argument") {
  CHECK_THROWS_AS(laurent_from_json(Json{{"not", "a list"}}), std::invalid_argument);
  CHECK_THROWS_AS(trunc_from_json(Json::array()), std::invalid_argument);
  CHECK_THROWS_AS(auto_from_json(Json{{"n", 2}}), std::invalid_argument);
  Json bad_scheme{{"base", "p2"}, {"charts", 3}, {"n", 1}, {"l_degree", 0}};
  CHECK_THROWS_AS(scheme_from_json(bad_scheme), std::invalid_argument);
}

TEST_CASE("profile parsing") {
  Json j{{"genus", 3},
         {"hyperelliptic", true},
         {"bundles", {{"theta", {{"degree", 2}, {"h0", 1}}}, {"l", {{"degree", -4}}}}}};
  CurveProfile p = profile_from_json(j);
  CHECK(p.genus == 3);
  CHECK(p.hyperelliptic);
  CHECK(p.bundle("theta").degree == 2);
  CHECK(p.bundle("theta").h0_override == 1);
  CHECK_FALSE(p.bundle("l").h0_override.has_value());
}
