#include "ribbon/multischeme.hpp"

#include <stdexcept>

namespace ribbon {

namespace {
void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

int overlap_count(Cover cover) { return cover == Cover::three_charts ? 3 : 1; }

std::pair<int, int> overlap_pair(int idx) {
  switch (idx) {
    case 0: return {0, 1};
    case 1: return {0, 2};
    case 2: return {1, 2};
    default: throw std::invalid_argument("bad overlap index");
  }
}

int overlap_index(int i, int j) {
  if (i == 0 && j == 1) return 0;
  if (i == 0 && j == 2) return 1;
  if (i == 1 && j == 2) return 2;
  throw std::invalid_argument("bad overlap pair");
}

int MultiScheme::l_exp(int i, int j) const {
  return twist_exponent(Twist{l_degree, 0}, i, j);
}

LaurentPoly MultiScheme::alpha0(int idx) const {
  auto [i, j] = overlap_pair(idx);
  return LaurentPoly::monomial(1, l_exp(i, j));
}

void ValidationReport::fail(std::string msg) {
  ok = false;
  issues.push_back(std::move(msg));
}

MultiScheme trivial_scheme(int l_degree, int n, Cover cover) {
  require(n >= 1, "multiplicity must be positive");
  MultiScheme X;
  X.cover = cover;
  X.n = n;
  X.l_degree = l_degree;
  for (int idx = 0; idx < overlap_count(cover); ++idx) {
    auto [i, j] = overlap_pair(idx);
    TruncElem ix = TruncElem::from_laurent(LaurentPoly::x(), n);
    TruncElem it(n);
    if (n >= 2)
      it = TruncElem::from_laurent(LaurentPoly::monomial(1, X.l_exp(i, j)), n).shifted_t(1);
    X.gluing.emplace_back(ix, it);
    if (n >= 2)
      X.ideal.push_back(TruncElem::from_laurent(LaurentPoly::monomial(1, X.l_exp(i, j)), n - 1));
  }
  return X;
}

MultiScheme make_double(int l_degree, const Cochain& D) {
  require(D.q == 1, "make_double expects a 1-cochain");
  require(D.twist == Twist{l_degree, 2}, "make_double: D must be valued in T tensor L");
  require(is_cocycle(D), "make_double: D is not a cocycle");
  MultiScheme X;
  X.cover = D.cover;
  X.n = 2;
  X.l_degree = l_degree;
  for (int idx = 0; idx < overlap_count(X.cover); ++idx) {
    auto [i, j] = overlap_pair(idx);
    TruncElem ix = TruncElem::from_laurent(LaurentPoly::x(), 2);
    ix.set_coeff(1, D.values[static_cast<size_t>(idx)]);
    TruncElem it =
        TruncElem::from_laurent(LaurentPoly::monomial(1, X.l_exp(i, j)), 2).shifted_t(1);
    X.gluing.emplace_back(ix, it);
    X.ideal.push_back(TruncElem::from_laurent(LaurentPoly::monomial(1, X.l_exp(i, j)), 1));
  }
  return X;
}

ValidationReport validate_gluing(const MultiScheme& X) {
  ValidationReport rep;
  const int novl = overlap_count(X.cover);
  if (X.n < 1) rep.fail("multiplicity must be positive");
  if (static_cast<int>(X.gluing.size()) != novl) {
    rep.fail("wrong number of gluing automorphisms");
    return rep;
  }
  if (X.n >= 2 && static_cast<int>(X.ideal.size()) != novl) {
    rep.fail("wrong number of conormal cocycle entries");
    return rep;
  }
  for (int idx = 0; idx < novl; ++idx) {
    auto [i, j] = overlap_pair(idx);
    const TruncAuto& g = X.glue(idx);
    std::string tag = std::to_string(i) + std::to_string(j);
    if (g.n() != X.n) {
      rep.fail("gluing " + tag + ": truncation order mismatch");
      continue;
    }
    if (X.n >= 2) {
      if (g.alpha0() != LaurentPoly::monomial(1, X.l_exp(i, j)))
        rep.fail("gluing " + tag + ": conormal unit does not reduce to the O(l) transition");
      TruncElem alpha = g.alpha();
      if (X.ideal[static_cast<size_t>(idx)].n() != X.n - 1 ||
          alpha != X.ideal[static_cast<size_t>(idx)])
        rep.fail("gluing " + tag + ": stored conormal cocycle disagrees with delta(t)");
    }
  }
  if (rep.ok && X.cover == Cover::three_charts) {
    TruncAuto comp = X.glue(overlap_index(0, 1)).compose(X.glue(overlap_index(1, 2)));
    if (!(comp == X.glue(overlap_index(0, 2))))
      rep.fail("cocycle failure: delta_01 after delta_12 differs from delta_02");
  }
  return rep;
}

MultiScheme restrict_multiplicity(const MultiScheme& X, int m) {
  require(m >= 1 && m <= X.n, "restrict_multiplicity: bad target multiplicity");
  MultiScheme Y;
  Y.cover = X.cover;
  Y.n = m;
  Y.l_degree = X.l_degree;
  for (int idx = 0; idx < overlap_count(X.cover); ++idx) {
    Y.gluing.push_back(X.glue(idx).truncated(m));
    if (m >= 2) Y.ideal.push_back(X.ideal[static_cast<size_t>(idx)].truncated(m - 1));
  }
  return Y;
}

bool schemes_equal(const MultiScheme& a, const MultiScheme& b) {
  if (a.cover != b.cover || a.n != b.n || a.l_degree != b.l_degree) return false;
  for (size_t i = 0; i < a.gluing.size(); ++i)
    if (!(a.gluing[i] == b.gluing[i])) return false;
  return a.ideal == b.ideal;
}

Cochain zeta_cochain(const MultiScheme& X) {
  require(X.n >= 2, "zeta_cochain needs multiplicity >= 2");
  Cochain D = Cochain::zero(1, X.cover, Twist{X.l_degree, 2});
  for (int idx = 0; idx < overlap_count(X.cover); ++idx)
    D.values[static_cast<size_t>(idx)] = X.glue(idx).image_x().coeff(1);
  return D;
}

CohClass double_class(const MultiScheme& X) {
  require(X.n == 2, "double_class expects a double structure");
  Cochain D = zeta_cochain(X);
  require(is_cocycle(D), "gluing derivations do not form a cocycle");
  return reduce_h1_class(D);
}

IdealExtensions ideal_extensions(const MultiScheme& X) {
  require(X.n >= 2, "ideal_extensions needs multiplicity >= 2");
  IdealExtensions ext;
  ext.eta_twist = Twist{X.l_degree * (X.n - 1), 0};
  ext.dim = cohomology_dim(effective_degree(ext.eta_twist), 1);
  for (int k = 0; k < ext.dim; ++k) {
    CohClass cls = zero_class(ext.eta_twist, 1);
    cls.coeffs[static_cast<size_t>(k)] = 1;
    ext.basis.push_back(cls);
  }
  // Reference extension: pad the conormal cocycle, then absorb the
  // triple-overlap defect at order t^(n-1).
  for (int idx = 0; idx < overlap_count(X.cover); ++idx)
    ext.reference.push_back(X.ideal[static_cast<size_t>(idx)].padded(X.n));
  if (X.cover == Cover::three_charts) {
    const TruncAuto& d01 = X.glue(0);
    TruncElem R = ext.reference[0] * d01.apply(ext.reference[2]) - ext.reference[1];
    for (int i = 0; i + 1 < X.n; ++i)
      require(R.coeff(i).is_zero(), "conormal cocycle fails its own relation");
    Cochain s = Cochain::zero(2, Cover::three_charts, ext.eta_twist);
    s.values[0] = R.coeff(X.n - 1);  // alpha0_02 = 1
    auto phi = solve_coboundary(s);
    require(phi.has_value(), "unreachable: H^2 vanishes");
    for (int idx = 0; idx < 3; ++idx) {
      auto [i, j] = overlap_pair(idx);
      LaurentPoly gamma = phi->values[static_cast<size_t>(idx)].shifted(X.l_exp(i, j));
      TruncElem& ref = ext.reference[static_cast<size_t>(idx)];
      ref.set_coeff(X.n - 1, ref.coeff(X.n - 1) + gamma);
    }
    TruncElem check = ext.reference[0] * d01.apply(ext.reference[2]) - ext.reference[1];
    require(check.is_zero(), "reference conormal extension is not a cocycle");
  }
  return ext;
}

std::vector<TruncElem> ideal_extension_from_cochain(const MultiScheme& X,
                                                    const IdealExtensions& ext,
                                                    const Cochain& eta) {
  require(eta.q == 1 && eta.cover == X.cover && eta.twist == ext.eta_twist,
          "eta has the wrong shape");
  require(is_cocycle(eta), "eta is not a cocycle");
  std::vector<TruncElem> theta = ext.reference;
  for (int idx = 0; idx < overlap_count(X.cover); ++idx) {
    auto [i, j] = overlap_pair(idx);
    LaurentPoly beta = eta.values[static_cast<size_t>(idx)].shifted(X.l_exp(i, j));
    theta[static_cast<size_t>(idx)].set_coeff(
        X.n - 1, theta[static_cast<size_t>(idx)].coeff(X.n - 1) + beta);
  }
  return theta;
}

std::vector<TruncElem> ideal_extension_cocycle(const MultiScheme& X, const IdealExtensions& ext,
                                               const std::vector<Rational>& coeffs) {
  require(static_cast<int>(coeffs.size()) == ext.dim, "wrong number of class coefficients");
  CohClass cls = zero_class(ext.eta_twist, 1);
  cls.coeffs = coeffs;
  return ideal_extension_from_cochain(X, ext, class_representative(cls, X.cover));
}

namespace {

std::vector<TruncAuto> lift_gluing(const MultiScheme& X, const std::vector<TruncElem>& theta) {
  require(static_cast<int>(theta.size()) == overlap_count(X.cover),
          "wrong number of conormal extension entries");
  std::vector<TruncAuto> psi;
  for (int idx = 0; idx < overlap_count(X.cover); ++idx) {
    require(theta[static_cast<size_t>(idx)].n() == X.n, "theta truncation order mismatch");
    require(theta[static_cast<size_t>(idx)].truncated(X.n - 1) ==
                (X.n >= 2 ? X.ideal[static_cast<size_t>(idx)]
                          : theta[static_cast<size_t>(idx)].truncated(0)),
            "theta does not extend the conormal cocycle");
    TruncElem ix = X.glue(idx).image_x().padded(X.n + 1);
    TruncElem it = theta[static_cast<size_t>(idx)].padded(X.n + 1).shifted_t(1);
    psi.emplace_back(ix, it);
  }
  return psi;
}

}  // namespace

Cochain scheme_lift_defect(const MultiScheme& X, const std::vector<TruncElem>& theta) {
  Cochain defect = Cochain::zero(2, Cover::three_charts, Twist{X.l_degree * X.n, 2});
  require(X.cover == Cover::three_charts, "lift defects live on the three-chart cover");
  auto psi = lift_gluing(X, theta);
  TruncElem comp = psi[0].apply(psi[2].image_x());
  TruncElem diff = comp - psi[1].image_x();
  for (int i = 0; i < X.n; ++i)
    require(diff.coeff(i).is_zero(), "lift defect below top order");
  defect.values[0] = diff.coeff(X.n);
  return defect;
}

MultiScheme extend_scheme(const MultiScheme& X, const std::vector<TruncElem>& theta) {
  auto psi = lift_gluing(X, theta);
  if (X.cover == Cover::three_charts) {
    Cochain defect = scheme_lift_defect(X, theta);
    auto e = solve_coboundary(defect);
    require(e.has_value(), "unreachable: H^2 vanishes");
    for (int idx = 0; idx < 3; ++idx) {
      TruncElem ix = psi[static_cast<size_t>(idx)].image_x();
      ix.set_coeff(X.n, ix.coeff(X.n) + e->values[static_cast<size_t>(idx)]);
      psi[static_cast<size_t>(idx)] = TruncAuto(ix, psi[static_cast<size_t>(idx)].image_t());
    }
  }
  MultiScheme Y;
  Y.cover = X.cover;
  Y.n = X.n + 1;
  Y.l_degree = X.l_degree;
  Y.gluing = std::move(psi);
  Y.ideal = theta;
  ValidationReport rep = validate_gluing(Y);
  require(rep.ok, "extended scheme failed validation");
  return Y;
}

ObstructionDifference obstruction_difference(const MultiScheme& X, const Cochain& eta) {
  require(X.cover == Cover::three_charts, "obstruction_difference needs the three-chart cover");
  IdealExtensions ext = ideal_extensions(X);
  ObstructionDifference rep;
  rep.cup_cochain = cup(zeta_cochain(X), eta);
  rep.cup_class = zero_class(rep.cup_cochain.twist, 1);  // H^2 = 0 on a curve
  auto w = solve_coboundary(rep.cup_cochain);
  require(w.has_value(), "unreachable: H^2 vanishes");
  rep.cup_witness = *w;
  std::vector<TruncElem> theta = ideal_extension_from_cochain(X, ext, eta);
  rep.defect_difference =
      scheme_lift_defect(X, theta) - scheme_lift_defect(X, ext.reference);
  auto diff_witness = solve_coboundary(rep.defect_difference - rep.cup_cochain);
  rep.matches_cup_mod_coboundary = diff_witness.has_value();
  return rep;
}

}  // namespace ribbon
