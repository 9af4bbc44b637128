#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ribbon/random_gen.hpp"

using namespace ribbon;

TEST_CASE("pullback line bundles validate and report their degree") {
  RandomGen g(401);
  for (int i = 0; i < 15; ++i) {
    MultiScheme X = g.scheme(g.uniform(-4, -1), g.uniform(1, 3));
    int d = g.uniform(-4, 4);
    BundleCocycle E = pullback_line_bundle(X, d);
    CHECK(validate_bundle(E).ok);
    CHECK(E.degree() == d);
  }
}

TEST_CASE("degree of a line bundle restriction is additive under tensor") {
  MultiScheme X = trivial_scheme(-2, 1);
  BundleCocycle a = pullback_line_bundle(X, 3), b = pullback_line_bundle(X, -5);
  BundleCocycle c = tensor_line_bundles(a, b);
  CHECK(validate_bundle(c).ok);
  CHECK(c.degree() == -2);
}

TEST_CASE("log-derivative class computes the degree") {
  MultiScheme X = trivial_scheme(0, 1);
  for (int d = -6; d <= 6; ++d) {
    CohClass cls = canonical_class(pullback_line_bundle(X, d));
    CHECK(cls.twist == Twist{0, -2});
    REQUIRE(cls.dim() == 1);
    CHECK(cls.coeffs[0] == d);
  }
}

TEST_CASE("log-derivative class is additive under tensor") {
  MultiScheme X = trivial_scheme(0, 1);
  for (int d = -6; d <= 6; ++d)
    for (int e = -6; e <= 6; ++e) {
      BundleCocycle a = pullback_line_bundle(X, d), b = pullback_line_bundle(X, e);
      CohClass ca = canonical_class(a), cb = canonical_class(b);
      CohClass cab = canonical_class(tensor_line_bundles(a, b));
      CHECK(cab.coeffs[0] == ca.coeffs[0] + cb.coeffs[0]);
    }
}

TEST_CASE("connecting morphism: formula equals the chartwise-lift oracle") {
  RandomGen g(402);
  for (int i = 0; i < 60; ++i) {
    int l = g.uniform(-4, -1);
    int n = g.uniform(2, 4);
    MultiScheme ambient = g.scheme(l, n);
    // eta: a global section of L^(n-1) where n + 1 is the ambient
    // multiplicity; for l < 0 the only section is 0 unless n = 1.
    Cochain sec = g.cocycle(0, Cover::three_charts, Twist{ambient.l_degree * (ambient.n - 2), 0});
    std::vector<LaurentPoly> eta;
    eta.push_back(sec.values[0]);
    eta.push_back(sec.values[1]);
    eta.push_back(sec.values[2]);
    Delta0Result res = delta0(ambient, eta);
    CHECK(res.formula == res.oracle);
    CHECK(res.agree_mod_coboundary);
    CHECK(is_cocycle(res.formula));
  }
}

TEST_CASE("connecting morphism on positive twists") {
  RandomGen g(403);
  for (int i = 0; i < 40; ++i) {
    // build a multiplicity-n scheme with l >= 0 so eta can be nonzero
    int l = g.uniform(0, 2);
    int n = g.uniform(2, 4);
    MultiScheme ambient = g.scheme(l, n);
    Cochain sec = g.cocycle(0, Cover::three_charts, Twist{l * (n - 2), 0});
    Delta0Result res = delta0(ambient, {sec.values[0], sec.values[1], sec.values[2]});
    CHECK(res.formula == res.oracle);
    CHECK(res.agree_mod_coboundary);
  }
}

TEST_CASE("second connecting morphism: formula equals the truncated-arithmetic oracle") {
  RandomGen g(404);
  for (int i = 0; i < 60; ++i) {
    int l = g.uniform(-4, 0);
    MultiScheme X = g.scheme(l, 2);
    BundleCocycle E = g.line_bundle(X, g.uniform(-3, 3));
    // an E-restricted 1-cocycle on the reduced scheme: sigma_02 = sigma_01 + theta0_01 sigma_12
    LaurentPoly s01 = g.laurent(-4, 4), s12 = g.laurent(-4, 4);
    LaurentPoly s02 = s01 + E.line(0).coeff(0) * s12;
    std::vector<LaurentMat> beta = {{{s01}}, {{s02}}, {{s12}}};
    Delta1Result res = delta1(E, beta);
    CHECK(res.formulas_agree);
    CHECK(res.class_is_zero);
  }
}

TEST_CASE("bundle extension and restriction round-trip") {
  RandomGen g(405);
  for (int i = 0; i < 15; ++i) {
    int l = g.uniform(-3, -1);
    int n = g.uniform(1, 3);
    MultiScheme big = g.scheme(l, n + 1);
    MultiScheme X = restrict_multiplicity(big, n);
    BundleCocycle E = g.line_bundle(X, g.uniform(-2, 2));
    BundleCocycle F = extend_bundle_reference(E, big);
    CHECK(validate_bundle(F).ok);
    BundleCocycle back = restrict_bundle(F, n);
    IsoResult iso = line_bundle_iso(back, E);
    CHECK(iso.isomorphic);
    // twisted extension
    Cochain beta = g.cocycle(1, X.cover, Twist{n * l, 0});
    BundleCocycle F2 = extend_bundle(E, big, beta);
    CHECK(validate_bundle(F2).ok);
    CHECK(line_bundle_iso(restrict_bundle(F2, n), E).isomorphic);
  }
}

TEST_CASE("isomorphism classifier separates twisted extensions") {
  MultiScheme big = trivial_scheme(-3, 2);
  MultiScheme X = trivial_scheme(-3, 1);
  BundleCocycle E = pullback_line_bundle(X, 0);
  ExtensionTorsor tor = extension_classes(E, big);
  CHECK(tor.torsor_dim == 2);
  CHECK(tor.quotient_dim == 2);
  std::vector<BundleCocycle> reps;
  reps.push_back(extend_bundle_reference(E, big));
  for (const CohClass& cls : tor.basis)
    reps.push_back(extend_bundle(E, big, class_representative(cls, big.cover)));
  for (size_t a = 0; a < reps.size(); ++a)
    for (size_t b = 0; b < reps.size(); ++b) {
      IsoResult iso = line_bundle_iso(reps[a], reps[b]);
      CHECK(iso.isomorphic == (a == b));
    }
}

TEST_CASE("isomorphism classifier identifies coboundary twists") {
  RandomGen g(406);
  MultiScheme big = trivial_scheme(-3, 2);
  BundleCocycle E = pullback_line_bundle(trivial_scheme(-3, 1), 0);
  // beta a coboundary: the twisted extension is isomorphic to the reference
  Cochain beta = coboundary(g.cochain(0, big.cover, Twist{-3, 0}));
  IsoResult iso = line_bundle_iso(extend_bundle(E, big, beta), extend_bundle_reference(E, big));
  CHECK(iso.isomorphic);
}

TEST_CASE("global sections of the structure sheaf") {
  // X_1: constants only. Trivial X_n: h^0(O(kl)) summed over k < n.
  CHECK(global_sections_basis(trivial_scheme(-3, 1)).size() == 1);
  CHECK(global_sections_basis(trivial_scheme(-3, 2)).size() == 1);
  CHECK(global_sections_basis(trivial_scheme(2, 2)).size() == 4);
  RandomGen g(407);
  for (int i = 0; i < 10; ++i) {
    MultiScheme X = g.scheme(g.uniform(-4, -1), g.uniform(2, 3));
    for (const auto& s : global_sections_basis(X)) {
      // verify the section equations directly
      for (int idx = 0; idx < overlap_count(X.cover); ++idx) {
        auto [a, b] = overlap_pair(idx);
        CHECK(X.glue(idx).apply(s[static_cast<size_t>(b)]) == s[static_cast<size_t>(a)]);
      }
    }
  }
}

TEST_CASE("picard ledger over the trivial tower") {
  CHECK(picard_ledger(-3, 3) == std::vector<int>{2, 5});
  CHECK(picard_ledger(-2, 3) == std::vector<int>{1, 3});
}

TEST_CASE("connecting-morphism shift under a change of extension") {
  RandomGen g(408);
  for (int i = 0; i < 20; ++i) {
    int l = g.uniform(0, 2);  // l >= 0 so L has nonzero sections
    Cochain mu = g.cocycle(1, Cover::three_charts, Twist{l, 0});
    std::vector<Rational> eta(static_cast<size_t>(l + 1));
    for (auto& c : eta) c = g.rational();
    Delta0ShiftReport rep = delta0_shift(l, eta, mu);
    CHECK(rep.equal_mod_coboundary);
  }
}

TEST_CASE("module types from presentations") {
  // free module of rank 2 over Q[t]/(t^3)
  ModulePresentation free2{3, 2, {}};
  CHECK(module_type(free2) == std::vector<int>{0, 0, 2});
  // Q[t]/(t) + Q[t]/(t^3): relations t e_1 = 0
  ModulePresentation mixed{3, 2, {{{0, 1, 0}, {0, 0, 0}}}};
  CHECK(module_type(mixed) == std::vector<int>{1, 0, 1});
  // filtration-annihilator containment: t^i M inside ker(t^(n-i))
  auto filt = module_filtration_dims(mixed);
  auto ann = module_annihilator_dims(mixed);
  for (int i = 0; i <= 3; ++i) CHECK(filt[static_cast<size_t>(i)] <= ann[static_cast<size_t>(3 - i)]);
}

TEST_CASE("module type is invariant under presentation equivalence") {
  RandomGen g(409);
  for (int i = 0; i < 40; ++i) {
    int n = g.uniform(1, 4);
    int gens = g.uniform(1, 3);
    ModulePresentation M{n, gens, {}};
    int rels = g.uniform(0, 3);
    for (int r = 0; r < rels; ++r) {
      std::vector<std::vector<Rational>> col(static_cast<size_t>(gens),
                                             std::vector<Rational>(static_cast<size_t>(n), 0));
      for (auto& gen : col)
        for (auto& c : gen) c = g.rational(3, 2);
      M.relations.push_back(col);
    }
    auto base = module_type(M);
    // add a redundant relation: a random combination of existing ones
    ModulePresentation M2 = M;
    if (!M.relations.empty()) {
      auto extra = M.relations[0];
      M2.relations.push_back(extra);
      CHECK(module_type(M2) == base);
    }
    // scale a relation by a unit
    if (!M.relations.empty()) {
      ModulePresentation M3 = M;
      for (auto& gen : M3.relations[0])
        for (auto& c : gen) c *= Rational(3, 7);
      CHECK(module_type(M3) == base);
    }
  }
}
