#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ribbon/random_gen.hpp"

using namespace ribbon;

TEST_CASE("laurent arithmetic basics") {
  LaurentPoly p = LaurentPoly::monomial(Rational(3, 2), -2) + LaurentPoly::x();
  CHECK(p.coeff(-2) == Rational(3, 2));
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(0) == 0);
  CHECK(p.min_exp() == -2);
  CHECK(p.max_exp() == 1);
  CHECK((p - p).is_zero());
  CHECK(p.derivative() == LaurentPoly::monomial(-3, -3) + LaurentPoly::one());
  CHECK(LaurentPoly::monomial(Rational(2), 5).is_unit());
  CHECK_FALSE(p.is_unit());
  CHECK(LaurentPoly::monomial(2, 3).inverse() == LaurentPoly::monomial(Rational(1, 2), -3));
}

TEST_CASE("laurent ring axioms, randomized") {
  RandomGen g(101);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = g.laurent(-8, 8), b = g.laurent(-8, 8), c = g.laurent(-8, 8);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("truncated ring axioms and units, randomized") {
  RandomGen g(102);
  const TruncElem dummy(1);
  for (int i = 0; i < 200; ++i) {
    int n = g.uniform(1, 6);
    TruncElem a = g.trunc(n, -8, 8), b = g.trunc(n, -8, 8), c = g.trunc(n, -8, 8);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    TruncElem u = g.unit_trunc(n);
    CHECK(u * u.inverse() == TruncElem::from_laurent(LaurentPoly::one(), n));
    CHECK(u.inverse() * u == TruncElem::from_laurent(LaurentPoly::one(), n));
  }
}

TEST_CASE("truncation is a ring morphism") {
  RandomGen g(103);
  for (int i = 0; i < 100; ++i) {
    int n = g.uniform(2, 6);
    int m = g.uniform(1, n);
    TruncElem a = g.trunc(n, -8, 8), b = g.trunc(n, -8, 8);
    CHECK((a * b).truncated(m) == a.truncated(m) * b.truncated(m));
    CHECK((a + b).truncated(m) == a.truncated(m) + b.truncated(m));
    CHECK(a.truncated(m).padded(n).truncated(m) == a.truncated(m));
  }
}

TEST_CASE("derivations satisfy the Leibniz rule") {
  RandomGen g(104);
  for (int i = 0; i < 100; ++i) {
    int n = g.uniform(1, 5);
    Derivation d(g.laurent(-3, 3, 3));
    TruncElem a = g.trunc(n), b = g.trunc(n);
    CHECK(d.apply(a * b) == d.apply(a) * b + a * d.apply(b));
    LaurentPoly f = g.laurent(), h = g.laurent();
    CHECK(d.apply(f * h) == d.apply(f) * h + f * d.apply(h));
  }
}

TEST_CASE("automorphisms: composition, inverse, truncation") {
  RandomGen g(105);
  for (int i = 0; i < 80; ++i) {
    int n = g.uniform(2, 6);
    TruncAuto f = g.chart_auto(n, g.uniform(-4, 4));
    TruncAuto h = g.chart_auto(n, g.uniform(-4, 4));
    TruncAuto fi = f.inverse();
    CHECK(f.compose(fi).is_identity());
    CHECK(fi.compose(f).is_identity());
    // apply is multiplicative
    TruncElem a = g.trunc(n), b = g.trunc(n);
    CHECK(f.apply(a * b) == f.apply(a) * f.apply(b));
    // composition agrees with applying twice
    CHECK(f.compose(h).apply(a) == f.apply(h.apply(a)));
    // truncation commutes with composition
    int m = g.uniform(2, n);
    CHECK(f.truncated(m).compose(h.truncated(m)).image_x() ==
          f.compose(h).truncated(m).image_x());
  }
}

TEST_CASE("automorphism conormal data") {
  TruncAuto id = TruncAuto::identity(3);
  CHECK(id.is_identity());
  CHECK(id.alpha0() == LaurentPoly::one());
  RandomGen g(106);
  TruncAuto f = g.chart_auto(4, -2);
  CHECK(f.alpha0().is_unit());
  CHECK(f.alpha().n() == 3);
  CHECK(f.alpha().coeff(0) == f.alpha0());
}
