// Acceptance suite: one line per criterion, exact rational arithmetic,
// zero tolerance. Exit code = number of failed criteria.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <vector>

#include "ribbon/random_gen.hpp"
#include "ribbon/surface.hpp"

using namespace ribbon;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_s,
               const std::function<bool()>& body) {
  auto start = Clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > budget_s) {
    ok = false;
    note += " (over time budget)";
  }
  if (!ok) ++failures;
  std::printf("%s criterion %2d: %s [%.2fs]%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              secs, note.c_str());
}

bool coboundary_equivalent(const Cochain& a, const Cochain& b) {
  auto w = solve_coboundary(a - b);
  return w.has_value() && coboundary(*w) == a - b;
}

}  // namespace

int main() {
  criterion(1, "ring and automorphism axioms (1000 random cases)", 10.0, [] {
    RandomGen g(1001);
    for (int i = 0; i < 1000; ++i) {
      int n = g.uniform(1, 6);
      TruncElem a = g.trunc(n, -8, 8), b = g.trunc(n, -8, 8), c = g.trunc(n, -8, 8);
      if ((a * b) * c != a * (b * c)) return false;
      if (a * (b + c) != a * b + a * c) return false;
      int m = g.uniform(1, n);
      if ((a * b).truncated(m) != a.truncated(m) * b.truncated(m)) return false;
      Derivation d(g.laurent(-8, 8, 3));
      if (d.apply(a * b) != d.apply(a) * b + a * d.apply(b)) return false;
      if (n >= 2) {
        TruncAuto f = g.chart_auto(n, g.uniform(-8, 8));
        TruncAuto fi = f.inverse();
        if (!f.compose(fi).is_identity() || !fi.compose(f).is_identity()) return false;
      }
      TruncElem u = g.unit_trunc(n, -8, 8);
      if (u * u.inverse() != TruncElem::from_laurent(LaurentPoly::one(), n)) return false;
    }
    return true;
  });

  criterion(2, "solver cohomology dimensions match closed forms", 5.0, [] {
    for (int d = -10; d <= 10; ++d)
      for (Cover cover : {Cover::two_charts, Cover::three_charts}) {
        auto [h0, h1] = solver_cohomology_dims(Twist{d, 0}, cover);
        if (h0 != std::max(d + 1, 0) || h1 != std::max(-d - 1, 0)) return false;
        if (h0 - h1 != d + 1) return false;
      }
    return true;
  });

  criterion(3, "degree-2 classes all bound (200 random 2-cocycles)", 30.0, [] {
    RandomGen g(1003);
    for (int i = 0; i < 200; ++i) {
      Twist t{g.uniform(-6, 3), 0};
      Cochain c = g.cochain(2, Cover::three_charts, t);
      auto w = solve_coboundary(c);
      if (!w || coboundary(*w) != c) return false;
    }
    return true;
  });

  criterion(4, "cup antisymmetry and representative independence (100 pairs)", 20.0, [] {
    RandomGen g(1004);
    for (int i = 0; i < 100; ++i) {
      Twist ta{g.uniform(-4, 1), 0}, tb{g.uniform(-4, 1), 0};
      Cochain a = g.cocycle(1, Cover::three_charts, ta);
      Cochain b = g.cocycle(1, Cover::three_charts, tb);
      Cochain ab = cup(a, b), ba = cup(b, a);
      auto w = solve_coboundary(ab + ba);
      if (!w || coboundary(*w) != ab + ba) return false;
      Cochain a2 = a + coboundary(g.cochain(0, Cover::three_charts, ta));
      Cochain b2 = b + coboundary(g.cochain(0, Cover::three_charts, tb));
      if (!coboundary_equivalent(cup(a2, b2), ab)) return false;
    }
    return true;
  });

  criterion(5, "connecting morphisms agree with snake oracles (100 + 100)", 60.0, [] {
    RandomGen g(1005);
    for (int i = 0; i < 100; ++i) {
      int l = g.uniform(-2, 2);
      int n = g.uniform(2, 4);
      MultiScheme ambient = g.scheme(l, n);
      Cochain sec = g.cocycle(0, Cover::three_charts, Twist{l * (n - 2), 0});
      Delta0Result res = delta0(ambient, {sec.values[0], sec.values[1], sec.values[2]});
      if (!res.agree_mod_coboundary) return false;
      if (!(res.formula == res.oracle)) return false;  // exact agreement here
    }
    for (int i = 0; i < 100; ++i) {
      int l = g.uniform(-4, 0);
      MultiScheme X = g.scheme(l, 2);
      BundleCocycle E = g.line_bundle(X, g.uniform(-3, 3));
      LaurentPoly s01 = g.laurent(-4, 4), s12 = g.laurent(-4, 4);
      LaurentPoly s02 = s01 + E.line(0).coeff(0) * s12;
      Delta1Result res = delta1(E, {{{s01}}, {{s02}}, {{s12}}});
      if (!res.formulas_agree || !res.class_is_zero) return false;
    }
    return true;
  });

  criterion(6, "obstruction difference equals cup product (50 random triples)", 120.0, [] {
    RandomGen g(1006);
    for (int i = 0; i < 50; ++i) {
      int l = g.uniform(-4, -1);
      int n = g.uniform(2, 3);
      MultiScheme X = g.scheme(l, n);
      Cochain eta = g.cocycle(1, Cover::three_charts, Twist{l * (n - 1), 0});
      ObstructionDifference od = obstruction_difference(X, eta);
      if (!od.matches_cup_mod_coboundary) return false;
      IdealExtensions ext = ideal_extensions(X);
      MultiScheme Y = extend_scheme(X, ext.reference);
      if (!validate_gluing(Y).ok) return false;
      if (!schemes_equal(restrict_multiplicity(Y, X.n), X)) return false;
    }
    return true;
  });

  criterion(7, "extension counts match quotient dimensions; ledger(-3,3) = [2,5]", 120.0, [] {
    for (auto [l, n] : std::vector<std::pair<int, int>>{{-2, 1}, {-2, 2}, {-3, 1}, {-3, 2}}) {
      MultiScheme X = trivial_scheme(l, n);
      MultiScheme big = trivial_scheme(l, n + 1);
      BundleCocycle E = pullback_line_bundle(X, 0);
      ExtensionTorsor tor = extension_classes(E, big);
      // reference extension plus slides along each torsor basis class
      std::vector<BundleCocycle> reps;
      reps.push_back(extend_bundle_reference(E, big));
      for (const CohClass& cls : tor.basis)
        reps.push_back(extend_bundle(E, big, class_representative(cls, big.cover)));
      // count pairwise non-isomorphic representatives
      std::set<size_t> distinct;
      for (size_t a = 0; a < reps.size(); ++a) {
        bool dup = false;
        for (size_t b : distinct)
          if (line_bundle_iso(reps[a], reps[b]).isomorphic) dup = true;
        if (!dup) distinct.insert(a);
      }
      // quotient dimension q gives 1 + q independent directions among
      // the 1 + torsor_dim sampled representatives
      if (static_cast<int>(distinct.size()) != 1 + tor.quotient_dim) return false;
    }
    return picard_ledger(-3, 3) == std::vector<int>{2, 5};
  });

  criterion(8, "log-derivative degree map and its additivity", 5.0, [] {
    MultiScheme X = trivial_scheme(0, 1);
    for (int d = -6; d <= 6; ++d) {
      CohClass cls = canonical_class(pullback_line_bundle(X, d));
      if (cls.dim() != 1 || cls.coeffs[0] != d) return false;
      for (int e = -6; e <= 6; ++e) {
        BundleCocycle a = pullback_line_bundle(X, d), b = pullback_line_bundle(X, e);
        CohClass sum = canonical_class(tensor_line_bundles(a, b));
        if (sum.coeffs[0] != canonical_class(a).coeffs[0] + canonical_class(b).coeffs[0])
          return false;
      }
    }
    return true;
  });

  criterion(9, "canonical filtration recovers module types", 30.0, [] {
    RandomGen g(1009);
    // enumerate all type vectors (m_1, ..., m_n) with sum i m_i <= 12
    std::function<bool(std::vector<int>&, int, int)> enumerate =
        [&](std::vector<int>& m, int i, int left) -> bool {
      if (i == static_cast<int>(m.size())) {
        int n = static_cast<int>(m.size());
        // build the direct sum of m_i copies of Q[t]/(t^i)
        ModulePresentation M{n, 0, {}};
        for (int part = 1; part <= n; ++part)
          for (int c = 0; c < m[static_cast<size_t>(part - 1)]; ++c) ++M.gens;
        int gen = 0;
        for (int part = 1; part <= n; ++part)
          for (int c = 0; c < m[static_cast<size_t>(part - 1)]; ++c, ++gen)
            if (part < n) {
              std::vector<std::vector<Rational>> col(
                  static_cast<size_t>(M.gens), std::vector<Rational>(static_cast<size_t>(n), 0));
              col[static_cast<size_t>(gen)][static_cast<size_t>(part)] = 1;  // t^part e_gen = 0
              M.relations.push_back(col);
            }
        if (module_type(M) != m) return false;
        // containment t^i M within ker(t^(n-i))
        auto filt = module_filtration_dims(M);
        auto ann = module_annihilator_dims(M);
        for (int k = 0; k <= n; ++k)
          if (filt[static_cast<size_t>(k)] > ann[static_cast<size_t>(n - k)]) return false;
        return true;
      }
      for (int v = 0; v * (i + 1) <= left; ++v) {
        m[static_cast<size_t>(i)] = v;
        if (!enumerate(m, i + 1, left - v * (i + 1))) return false;
      }
      m[static_cast<size_t>(i)] = 0;
      return true;
    };
    for (int n = 1; n <= 4; ++n) {
      std::vector<int> m(static_cast<size_t>(n), 0);
      if (!enumerate(m, 0, 12)) return false;
    }
    // invariance under 100 random presentation equivalences
    for (int i = 0; i < 100; ++i) {
      int n = g.uniform(1, 4);
      int gens = g.uniform(1, 3);
      ModulePresentation M{n, gens, {}};
      int rels = g.uniform(1, 3);
      for (int r = 0; r < rels; ++r) {
        std::vector<std::vector<Rational>> col(static_cast<size_t>(gens),
                                               std::vector<Rational>(static_cast<size_t>(n), 0));
        for (auto& gg : col)
          for (auto& c : gg) c = g.rational(3, 2);
        M.relations.push_back(col);
      }
      auto base = module_type(M);
      ModulePresentation M2 = M;
      M2.relations.push_back(M.relations[0]);  // redundant relation
      Rational unit(g.uniform(1, 5), g.uniform(1, 3));
      for (auto& gg : M2.relations.back())
        for (auto& c : gg) c *= unit;
      if (module_type(M2) != base) return false;
    }
    return true;
  });

  criterion(10, "surface layer: Kunneth, additivity, lattice, worked verdicts", 10.0, [] {
    RandomGen g(1010);
    for (int i = 0; i < 200; ++i) {
      CurveProfile c, d;
      c.genus = g.uniform(0, 4);
      d.genus = g.uniform(0, 4);
      c.add_bundle("a", g.uniform(-6, 6));
      d.add_bundle("b", g.uniform(-6, 6));
      auto kd = kunneth_dims(c, d, "a", "b");
      int chi_c = h0(c, c.bundle("a")) - h1(c, c.bundle("a"));
      int chi_d = h0(d, d.bundle("b")) - h1(d, d.bundle("b"));
      if (kd[0] - kd[1] + kd[2] != chi_c * chi_d) return false;
    }
    PairingData pd = p1_pairings(-2, -2);
    EtaVector eta;
    eta.eta1 = Rational(1) / pd.phi_c[0];
    eta.eta4 = Rational(1) / pd.phi_d[0];
    for (int a = -10; a <= 10; ++a)
      for (int b = -10; b <= 10; ++b) {
        if (obstruction_surface(eta, a, b, pd).extendable != (a + b == 0)) return false;
        // additivity spot check
        auto r1 = obstruction_surface(eta, a, b, pd);
        auto r2 = obstruction_surface(eta, -a, 1 - b, pd);
        auto r12 = obstruction_surface(eta, 0, 1, pd);
        for (size_t r = 0; r < r12.delta.size(); ++r)
          for (size_t s = 0; s < r12.delta[r].size(); ++s)
            if (r12.delta[r][s] != r1.delta[r][s] + r2.delta[r][s]) return false;
      }
    K3Report worked = k3_classify(2, 3, false, 2, 2);
    if (worked.lattice != K3Report::Lattice::line) return false;
    if (worked.generator != std::pair<long long, long long>{3, -2}) return false;
    if (worked.projective || worked.extends_to_x3) return false;
    if (!k3_classify(1, -2, false, 2, 2).projective) return false;
    return true;
  });

  criterion(11, "boundary predicates and moduli fiber rank", 1.0, [] {
    NonbanalReport rep = nonbanal_predicates(3, -4, false, false);
    if (!rep.ok || !rep.pic_nonbanal || !rep.moduli_nonbanal) return false;
    ModuliRankReport r = moduli_fiber_rank(2, 3, -1);
    return r.ok && r.rank == 4;
  });

  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criterion/criteria FAILED\n", failures);
  return failures;
}
