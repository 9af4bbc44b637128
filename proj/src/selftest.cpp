#include "ribbon/selftest.hpp"

#include <functional>
#include <ostream>
#include <string>

#include "ribbon/bundles.hpp"
#include "ribbon/random_gen.hpp"

namespace ribbon {

namespace {

struct Runner {
  std::ostream& out;
  int failures = 0;

  void group(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    if (!ok) ++failures;
    out << (ok ? "ok   " : "FAIL ") << name << note << "\n";
  }
};

}  // namespace

int run_selftest(std::uint64_t seed, std::ostream& out) {
  Runner r{out};

  r.group("ring-axioms", [&] {
    RandomGen g(seed);
    for (int i = 0; i < 60; ++i) {
      int n = g.uniform(1, 5);
      TruncElem a = g.trunc(n), b = g.trunc(n), c = g.trunc(n);
      if (a * (b + c) != a * b + a * c) return false;
      if ((a * b) * c != a * (b * c)) return false;
      TruncElem u = g.unit_trunc(n);
      if (u * u.inverse() != TruncElem::from_laurent(LaurentPoly::one(), n)) return false;
    }
    return true;
  });

  r.group("auto-inverse", [&] {
    RandomGen g(seed + 1);
    for (int i = 0; i < 40; ++i) {
      int n = g.uniform(2, 4);
      TruncAuto f = g.chart_auto(n, g.uniform(-3, 3));
      TruncAuto fi = f.inverse();
      if (!f.compose(fi).is_identity() || !fi.compose(f).is_identity()) return false;
    }
    return true;
  });

  r.group("cohomology-dims", [&] {
    for (int d = -8; d <= 8; ++d)
      for (Cover cover : {Cover::two_charts, Cover::three_charts}) {
        auto [h0, h1] = solver_cohomology_dims(Twist{d, 0}, cover);
        if (h0 != cohomology_dim(d, 0) || h1 != cohomology_dim(d, 1)) return false;
      }
    return true;
  });

  r.group("coboundary-solver", [&] {
    RandomGen g(seed + 2);
    for (int i = 0; i < 40; ++i) {
      Twist t{g.uniform(-5, 5), 0};
      Cochain tau = g.cochain(1, Cover::three_charts, t);
      Cochain c = coboundary(tau);
      auto w = solve_coboundary(c);
      if (!w || coboundary(*w) != c) return false;
    }
    return true;
  });

  r.group("double-class-roundtrip", [&] {
    RandomGen g(seed + 3);
    for (int i = 0; i < 25; ++i) {
      int l = g.uniform(-5, -2);
      Cochain D = g.cocycle(1, Cover::three_charts, Twist{l, 2});
      MultiScheme X = make_double(l, D);
      if (!validate_gluing(X).ok) return false;
      if (!(double_class(X) == reduce_h1_class(D))) return false;
    }
    return true;
  });

  r.group("extend-restrict", [&] {
    RandomGen g(seed + 4);
    for (int i = 0; i < 12; ++i) {
      int l = g.uniform(-4, -1);
      MultiScheme X = g.scheme(l, g.uniform(2, 4));
      IdealExtensions ext = ideal_extensions(X);
      MultiScheme Y = extend_scheme(X, ext.reference);
      if (!validate_gluing(Y).ok) return false;
      if (!schemes_equal(restrict_multiplicity(Y, X.n), X)) return false;
    }
    return true;
  });

  r.group("bundle-validate", [&] {
    RandomGen g(seed + 5);
    for (int i = 0; i < 12; ++i) {
      int l = g.uniform(-3, -1);
      MultiScheme X = g.scheme(l, g.uniform(1, 3));
      BundleCocycle E = g.line_bundle(X, g.uniform(-3, 3));
      if (!validate_bundle(E).ok) return false;
      IsoResult iso = line_bundle_iso(E, E);
      if (!iso.isomorphic) return false;
    }
    return true;
  });

  r.group("picard-ledger", [&] {
    auto led = picard_ledger(-3, 3);
    return led == std::vector<int>{2, 5};
  });

  out << (r.failures == 0 ? "selftest passed" : "selftest FAILED") << " (seed " << seed << ")\n";
  return r.failures;
}

}  // namespace ribbon
