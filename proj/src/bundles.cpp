#include "ribbon/bundles.hpp"

#include <stdexcept>

#include "ribbon/linalg.hpp"

namespace ribbon {

namespace {
void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

const TruncElem& BundleCocycle::line(int idx) const {
  if (rank != 1) throw std::logic_error("line() on a higher-rank bundle");
  return transitions.at(static_cast<size_t>(idx))[0][0];
}

int BundleCocycle::degree() const {
  const LaurentPoly& u = line(0).coeff(0);
  require(u.is_unit(), "transition does not reduce to a unit");
  return u.max_exp();
}

TruncMat mat_identity(int rank, int n) {
  TruncMat m(static_cast<size_t>(rank),
             std::vector<TruncElem>(static_cast<size_t>(rank), TruncElem(n)));
  for (int i = 0; i < rank; ++i)
    m[static_cast<size_t>(i)][static_cast<size_t>(i)] =
        TruncElem::from_laurent(LaurentPoly::one(), n);
  return m;
}

TruncMat mat_mul(const TruncMat& a, const TruncMat& b) {
  const size_t r = a.size(), k = b.size(), c = b[0].size();
  require(a[0].size() == k, "matrix shape mismatch");
  const int n = a[0][0].n();
  TruncMat m(r, std::vector<TruncElem>(c, TruncElem(n)));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      for (size_t s = 0; s < k; ++s) m[i][j] = m[i][j] + a[i][s] * b[s][j];
  return m;
}

TruncMat mat_apply(const TruncAuto& g, const TruncMat& m) {
  TruncMat r = m;
  for (auto& row : r)
    for (auto& e : row) e = g.apply(e);
  return r;
}

TruncMat mat_sub(const TruncMat& a, const TruncMat& b) {
  TruncMat r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] = r[i][j] - b[i][j];
  return r;
}

bool mat_is_zero(const TruncMat& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

BundleCocycle make_bundle(const MultiScheme& X, int rank, std::vector<TruncMat> transitions) {
  BundleCocycle E;
  E.scheme = X;
  E.rank = rank;
  E.transitions = std::move(transitions);
  ValidationReport rep = validate_bundle(E);
  require(rep.ok, "invalid bundle cocycle");
  return E;
}

BundleCocycle make_line_bundle(const MultiScheme& X, const std::vector<TruncElem>& transitions) {
  std::vector<TruncMat> mats;
  for (const auto& t : transitions) mats.push_back(TruncMat{{t}});
  return make_bundle(X, 1, std::move(mats));
}

BundleCocycle pullback_line_bundle(const MultiScheme& X, int d) {
  // Start on the reduced subscheme and extend level by level along the
  // canonical lifts; on trivial gluing the transitions stay x^(d_ij).
  Twist t{d, 0};
  std::vector<TruncElem> trans;
  for (int idx = 0; idx < overlap_count(X.cover); ++idx) {
    auto [i, j] = overlap_pair(idx);
    trans.push_back(
        TruncElem::from_laurent(LaurentPoly::monomial(1, twist_exponent(t, i, j)), 1));
  }
  BundleCocycle E = make_line_bundle(restrict_multiplicity(X, 1), trans);
  for (int m = 2; m <= X.n; ++m)
    E = extend_bundle_reference(E, restrict_multiplicity(X, m));
  return E;
}

ValidationReport validate_bundle(const BundleCocycle& E) {
  ValidationReport rep;
  const MultiScheme& X = E.scheme;
  if (static_cast<int>(E.transitions.size()) != overlap_count(X.cover)) {
    rep.fail("wrong number of transition matrices");
    return rep;
  }
  for (int idx = 0; idx < overlap_count(X.cover); ++idx) {
    const TruncMat& m = E.at(idx);
    if (static_cast<int>(m.size()) != E.rank) {
      rep.fail("transition matrix has wrong shape");
      return rep;
    }
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != E.rank) {
        rep.fail("transition matrix has wrong shape");
        return rep;
      }
      for (const auto& e : row)
        if (e.n() != X.n) {
          rep.fail("transition truncation order mismatch");
          return rep;
        }
    }
    if (E.rank == 1 && !m[0][0].is_unit())
      rep.fail("line-bundle transition does not reduce to a unit");
  }
  if (X.cover == Cover::three_charts) {
    TruncMat expect = mat_mul(E.at(0), mat_apply(X.glue(0), E.at(2)));
    if (!mat_is_zero(mat_sub(expect, E.at(1))))
      rep.fail("transition cocycle relation fails on the triple overlap");
  }
  return rep;
}

BundleCocycle restrict_bundle(const BundleCocycle& E, int m) {
  BundleCocycle R;
  R.scheme = restrict_multiplicity(E.scheme, m);
  R.rank = E.rank;
  for (const auto& mat : E.transitions) {
    TruncMat t = mat;
    for (auto& row : t)
      for (auto& e : row) e = e.truncated(m);
    R.transitions.push_back(std::move(t));
  }
  return R;
}

BundleCocycle tensor_line_bundles(const BundleCocycle& a, const BundleCocycle& b) {
  require(a.rank == 1 && b.rank == 1, "tensor_line_bundles expects line bundles");
  require(schemes_equal(a.scheme, b.scheme), "tensor over different schemes");
  std::vector<TruncElem> trans;
  for (int idx = 0; idx < overlap_count(a.scheme.cover); ++idx)
    trans.push_back(a.line(idx) * b.line(idx));
  return make_line_bundle(a.scheme, trans);
}

CohClass canonical_class(const BundleCocycle& E) {
  require(E.scheme.n == 1, "canonical_class lives on the reduced subscheme");
  require(E.rank == 1, "canonical_class implemented for line bundles");
  Cochain c = Cochain::zero(1, E.scheme.cover, Twist{0, -2});
  for (int idx = 0; idx < overlap_count(E.scheme.cover); ++idx) {
    const LaurentPoly& u = E.line(idx).coeff(0);
    require(u.is_unit(), "transition does not reduce to a unit");
    c.values[static_cast<size_t>(idx)] = u.derivative() * u.inverse();
  }
  require(is_cocycle(c), "logarithmic derivative cocycle relation fails");
  return reduce_h1_class(c);
}

Cochain delta0_section(const MultiScheme& ambient, const std::vector<TruncElem>& s) {
  const int n = ambient.n - 1;
  require(n >= 1, "ambient multiplicity must be at least 2");
  require(static_cast<int>(s.size()) == chart_count(ambient.cover), "one section per chart");
  Cochain out = Cochain::zero(1, ambient.cover, Twist{ambient.l_degree * n, 0});
  for (int idx = 0; idx < overlap_count(ambient.cover); ++idx) {
    auto [i, j] = overlap_pair(idx);
    TruncElem si = s[static_cast<size_t>(i)].padded(ambient.n);
    TruncElem sj = s[static_cast<size_t>(j)].padded(ambient.n);
    TruncElem diff = ambient.glue(idx).apply(sj) - si;
    for (int k = 0; k < n; ++k)
      require(diff.coeff(k).is_zero(), "input is not a global section below top order");
    out.values[static_cast<size_t>(idx)] = diff.coeff(n);
  }
  return out;
}

Delta0Result delta0(const MultiScheme& ambient, const std::vector<LaurentPoly>& eta) {
  const int n = ambient.n - 1;
  require(n >= 1, "ambient multiplicity must be at least 2");
  require(static_cast<int>(eta.size()) == chart_count(ambient.cover), "one section per chart");
  // eta must be a global section of L^(n-1).
  Cochain eta_c = Cochain::zero(0, ambient.cover, Twist{ambient.l_degree * (n - 1), 0});
  eta_c.values = eta;
  require(is_cocycle(eta_c), "eta is not a global section of L^(n-1)");

  Delta0Result res;
  res.formula = Cochain::zero(1, ambient.cover, Twist{ambient.l_degree * n, 0});
  for (int idx = 0; idx < overlap_count(ambient.cover); ++idx) {
    auto [i, j] = overlap_pair(idx);
    const LaurentPoly& etaj = eta[static_cast<size_t>(j)];
    Derivation D = ambient.glue(idx).order_t_derivation();
    LaurentPoly val = D.apply(etaj).shifted(ambient.l_exp(i, j) * (n - 1));
    if (n >= 2) {
      LaurentPoly a1 = ambient.ideal[static_cast<size_t>(idx)].coeff(1);
      val += a1 * etaj.shifted(ambient.l_exp(i, j) * (n - 2)) * Rational(n - 1);
    }
    res.formula.values[static_cast<size_t>(idx)] = val;
  }
  std::vector<TruncElem> s;
  for (int i = 0; i < chart_count(ambient.cover); ++i)
    s.push_back(
        TruncElem::from_laurent(eta[static_cast<size_t>(i)], ambient.n - 1).shifted_t(n - 1));
  res.oracle = delta0_section(ambient, s);
  require(is_cocycle(res.oracle), "connecting cochain is not a cocycle");
  require(is_cocycle(res.formula), "closed-form cochain is not a cocycle");
  res.cls = reduce_h1_class(res.oracle);
  res.agree_mod_coboundary = solve_coboundary(res.formula - res.oracle).has_value();
  return res;
}

namespace {

LaurentMat lmat_sub(const LaurentMat& a, const LaurentMat& b) {
  LaurentMat r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

bool lmat_zero(const LaurentMat& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

LaurentMat lmat_mul(const LaurentMat& a, const LaurentMat& b) {
  LaurentMat r(a.size(), std::vector<LaurentPoly>(b[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b[0].size(); ++j)
      for (size_t s = 0; s < b.size(); ++s) r[i][j] += a[i][s] * b[s][j];
  return r;
}

LaurentMat tmat_coeff(const TruncMat& m, int k) {
  LaurentMat r(m.size(), std::vector<LaurentPoly>(m[0].size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) r[i][j] = m[i][j].coeff(k);
  return r;
}

TruncMat lmat_embed(const LaurentMat& m, int n) {
  TruncMat r(m.size(), std::vector<TruncElem>(m[0].size(), TruncElem(n)));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) r[i][j] = TruncElem::from_laurent(m[i][j], n);
  return r;
}

}  // namespace

Delta1Result delta1(const BundleCocycle& E, const std::vector<LaurentMat>& beta) {
  const MultiScheme& X = E.scheme;
  require(X.n == 2, "delta1 expects a bundle on a double structure");
  require(X.cover == Cover::three_charts, "delta1 needs the three-chart cover");
  require(static_cast<int>(beta.size()) == 3, "beta needs one value per overlap");
  for (const auto& b : beta)
    require(static_cast<int>(b.size()) == E.rank && b[0].size() == 1,
            "beta values must be rank-sized column vectors");
  // Cocycle relation for the restriction to the reduced subscheme:
  // beta_02 = beta_01 + theta0_01 beta_12.
  LaurentMat theta0_01 = tmat_coeff(E.at(0), 0);
  LaurentMat rel = lmat_sub(beta[1], beta[0]);
  rel = lmat_sub(rel, lmat_mul(theta0_01, beta[2]));
  require(lmat_zero(rel), "beta is not a cocycle for the restricted bundle");

  Delta1Result res;
  // Closed form: theta0_01 D_01(beta_12) + theta1_01 beta_12.
  Derivation D = X.glue(0).order_t_derivation();
  LaurentMat dbeta = beta[2];
  for (auto& row : dbeta)
    for (auto& e : row) e = D.apply(e);
  LaurentMat formula =
      lmat_mul(theta0_01, dbeta);
  LaurentMat t1b = lmat_mul(tmat_coeff(E.at(0), 1), beta[2]);
  for (size_t i = 0; i < formula.size(); ++i) formula[i][0] += t1b[i][0];
  res.formula.push_back(formula);
  // Lift-and-differentiate: t-coefficient of
  // beta_01 - beta_02 + theta_01 delta_01(beta_12).
  TruncMat acc = lmat_embed(beta[0], 2);
  acc = mat_sub(acc, lmat_embed(beta[1], 2));
  TruncMat lifted = mat_mul(E.at(0), mat_apply(X.glue(0), lmat_embed(beta[2], 2)));
  for (size_t i = 0; i < acc.size(); ++i) acc[i][0] = acc[i][0] + lifted[i][0];
  require(lmat_zero(tmat_coeff(acc, 0)), "order-0 part of the lift defect must vanish");
  res.oracle.push_back(tmat_coeff(acc, 1));
  res.formulas_agree = lmat_zero(lmat_sub(res.formula[0], res.oracle[0]));
  // H^2 vanishes: an explicit witness is tau_02 := value, tau_01 = tau_12 = 0.
  res.class_is_zero = true;
  return res;
}

BundleCocycle extend_bundle_reference(const BundleCocycle& E, const MultiScheme& ambient) {
  const MultiScheme& X = E.scheme;
  require(ambient.n == X.n + 1, "ambient multiplicity must be n + 1");
  require(schemes_equal(restrict_multiplicity(ambient, X.n), X),
          "ambient does not restrict to the bundle's scheme");
  std::vector<TruncMat> trans;
  for (const auto& m : E.transitions) {
    TruncMat t = m;
    for (auto& row : t)
      for (auto& e : row) e = e.padded(ambient.n);
    trans.push_back(std::move(t));
  }
  if (X.cover == Cover::three_charts) {
    TruncMat defect =
        mat_sub(mat_mul(trans[0], mat_apply(ambient.glue(0), trans[2])), trans[1]);
    for (int k = 0; k < X.n; ++k)
      require(lmat_zero(tmat_coeff(defect, k)), "lift defect below top order");
    // Absorb the defect into theta_02 (a one-slot coboundary witness).
    LaurentMat rho = tmat_coeff(defect, X.n);
    for (size_t i = 0; i < trans[1].size(); ++i)
      for (size_t j = 0; j < trans[1][i].size(); ++j)
        trans[1][i][j].set_coeff(X.n, trans[1][i][j].coeff(X.n) + rho[i][j]);
  }
  BundleCocycle R;
  R.scheme = ambient;
  R.rank = E.rank;
  R.transitions = std::move(trans);
  ValidationReport rep = validate_bundle(R);
  require(rep.ok, "extended bundle failed validation");
  return R;
}

BundleCocycle extend_bundle(const BundleCocycle& E, const MultiScheme& ambient,
                            const Cochain& beta) {
  require(E.rank == 1, "twisted extensions implemented for line bundles");
  const int n = E.scheme.n;
  require(beta.q == 1 && beta.cover == E.scheme.cover &&
              beta.twist == Twist{E.scheme.l_degree * n, 0},
          "beta must be a 1-cochain valued in L^n");
  require(is_cocycle(beta), "beta is not a cocycle");
  BundleCocycle R = extend_bundle_reference(E, ambient);
  for (int idx = 0; idx < overlap_count(ambient.cover); ++idx) {
    TruncElem factor = TruncElem::from_laurent(LaurentPoly::one(), ambient.n) +
                       TruncElem::from_laurent(beta.values[static_cast<size_t>(idx)], ambient.n)
                           .shifted_t(n);
    R.transitions[static_cast<size_t>(idx)][0][0] =
        factor * R.transitions[static_cast<size_t>(idx)][0][0];
  }
  ValidationReport rep = validate_bundle(R);
  require(rep.ok, "twisted extension failed validation");
  return R;
}

IsoResult line_bundle_iso(const BundleCocycle& a, const BundleCocycle& b) {
  IsoResult res;
  require(a.rank == 1 && b.rank == 1, "line_bundle_iso expects line bundles");
  require(schemes_equal(a.scheme, b.scheme), "bundles live on different schemes");
  const MultiScheme& X = a.scheme;
  const int novl = overlap_count(X.cover);
  // Order 0: the restrictions to the reduced subscheme are isomorphic
  // exactly when the degrees agree.
  LaurentPoly r01 = a.line(0).coeff(0) * b.line(0).coeff(0).inverse();
  if (r01.max_exp() != 0) {
    res.reason = "restricted degrees differ";
    return res;
  }
  std::vector<TruncElem> mu;
  mu.push_back(TruncElem::from_laurent(LaurentPoly::one(), X.n));
  mu.push_back(TruncElem::from_laurent(r01.inverse(), X.n));
  if (X.cover == Cover::three_charts) {
    LaurentPoly r02 = a.line(1).coeff(0) * b.line(1).coeff(0).inverse();
    mu.push_back(TruncElem::from_laurent(r02.inverse(), X.n));
  }
  auto transformed = [&](int idx) {
    auto [i, j] = overlap_pair(idx);
    return mu[static_cast<size_t>(i)] * b.line(idx) *
           X.glue(idx).apply(mu[static_cast<size_t>(j)]).inverse();
  };
  for (int k = 1; k < X.n; ++k) {
    Cochain r = Cochain::zero(1, X.cover, Twist{X.l_degree * k, 0});
    for (int idx = 0; idx < novl; ++idx) {
      TruncElem R = a.line(idx) * transformed(idx).inverse();
      require(R.coeff(0) == LaurentPoly::one(), "iso iteration lost normalization");
      for (int s = 1; s < k; ++s)
        require(R.coeff(s).is_zero(), "iso iteration lost lower orders");
      r.values[static_cast<size_t>(idx)] = R.coeff(k);
    }
    require(is_cocycle(r), "order-k discrepancy is not a cocycle");
    auto m = solve_coboundary(r);
    if (!m) {
      res.reason = "nonzero obstruction class at order " + std::to_string(k);
      return res;
    }
    for (int i = 0; i < chart_count(X.cover); ++i) {
      TruncElem factor =
          TruncElem::from_laurent(LaurentPoly::one(), X.n) +
          TruncElem::from_laurent(m->values[static_cast<size_t>(i)], X.n).shifted_t(k);
      mu[static_cast<size_t>(i)] = mu[static_cast<size_t>(i)] * factor;
    }
  }
  for (int idx = 0; idx < novl; ++idx)
    require(transformed(idx) == a.line(idx), "iso witness verification failed");
  res.isomorphic = true;
  res.witness = std::move(mu);
  return res;
}

std::vector<std::vector<TruncElem>> global_sections_basis(const MultiScheme& X) {
  const int charts = chart_count(X.cover);
  // Exponent window: generous bound from the gluing data.
  int span = std::abs(X.l_degree);
  for (const auto& g : X.gluing) {
    for (const auto& p : g.image_x().coeffs())
      if (!p.is_zero()) span = std::max({span, std::abs(p.min_exp()), std::abs(p.max_exp())});
    for (const auto& p : g.image_t().coeffs())
      if (!p.is_zero()) span = std::max({span, std::abs(p.min_exp()), std::abs(p.max_exp())});
  }
  const int B = X.n * (span + 1) + 2;
  LinearSystem sys;
  std::map<std::tuple<int, int, int>, int> vars;  // (chart, t-order, exponent)
  for (int c = 0; c < charts; ++c)
    for (int k = 0; k < X.n; ++k)
      for (int e = -B; e <= B; ++e) {
        if (c == 0 && e < 0) continue;
        if (c == 1 && e > 0) continue;
        vars[{c, k, e}] = sys.new_var();
      }
  std::map<std::tuple<int, int, int>, int> eqs;  // (overlap, t-order, exponent)
  auto eq_at = [&](int idx, int k, int e) {
    auto it = eqs.find({idx, k, e});
    if (it != eqs.end()) return it->second;
    int id = sys.new_eq();
    eqs[{idx, k, e}] = id;
    return id;
  };
  for (int idx = 0; idx < overlap_count(X.cover); ++idx) {
    auto [i, j] = overlap_pair(idx);
    // s_i - delta_ij(s_j) = 0, coefficientwise.
    for (const auto& [key, var] : vars) {
      auto [c, k, e] = key;
      if (c == i) {
        sys.add_coeff(eq_at(idx, k, e), var, 1);
      } else if (c == j) {
        TruncElem img =
            X.glue(idx).apply(TruncElem::from_laurent(LaurentPoly::monomial(1, e), X.n)
                                  .shifted_t(k));
        for (int kk = 0; kk < X.n; ++kk)
          for (const auto& [ee, cc] : img.coeff(kk).terms())
            sys.add_coeff(eq_at(idx, kk, ee), var, -cc);
      }
    }
  }
  std::vector<std::vector<TruncElem>> basis;
  for (const auto& vec : sys.kernel_basis()) {
    std::vector<TruncElem> s(static_cast<size_t>(charts), TruncElem(X.n));
    for (const auto& [key, var] : vars) {
      auto [c, k, e] = key;
      const Rational& v = vec[static_cast<size_t>(var)];
      if (v == 0) continue;
      TruncElem& sc = s[static_cast<size_t>(c)];
      sc.set_coeff(k, sc.coeff(k) + LaurentPoly::monomial(v, e));
    }
    basis.push_back(std::move(s));
  }
  return basis;
}

ExtensionTorsor extension_classes(const BundleCocycle& E, const MultiScheme& ambient) {
  require(E.rank == 1, "extension_classes implemented for line bundles");
  const MultiScheme& X = E.scheme;
  require(ambient.n == X.n + 1, "ambient multiplicity must be n + 1");
  require(schemes_equal(restrict_multiplicity(ambient, X.n), X),
          "ambient does not restrict to the bundle's scheme");
  ExtensionTorsor t;
  Twist tw{X.l_degree * X.n, 0};
  t.torsor_dim = cohomology_dim(effective_degree(tw), 1);
  for (int k = 0; k < t.torsor_dim; ++k) {
    CohClass cls = zero_class(tw, 1);
    cls.coeffs[static_cast<size_t>(k)] = 1;
    t.basis.push_back(cls);
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& s : global_sections_basis(X)) {
    CohClass cls = reduce_h1_class(delta0_section(ambient, s));
    rows.push_back(cls.coeffs);
  }
  t.delta0_image_dim = rows.empty() || t.torsor_dim == 0 ? 0 : matrix_rank(rows);
  t.quotient_dim = t.torsor_dim - t.delta0_image_dim;
  return t;
}

std::vector<int> picard_ledger(int l_degree, int n_max) {
  require(n_max >= 2, "picard_ledger needs n_max >= 2");
  std::vector<int> ledger;
  for (int k = 1; k < n_max; ++k) {
    MultiScheme X = trivial_scheme(l_degree, k);
    MultiScheme ambient = trivial_scheme(l_degree, k + 1);
    BundleCocycle E = pullback_line_bundle(X, 0);
    ExtensionTorsor t = extension_classes(E, ambient);
    ledger.push_back(t.quotient_dim);
  }
  return ledger;
}

Delta0ShiftReport delta0_shift(int l_degree, const std::vector<Rational>& eta_h0_coeffs,
                               const Cochain& mu) {
  MultiScheme X2 = trivial_scheme(l_degree, 2);
  IdealExtensions ext = ideal_extensions(X2);
  require(mu.q == 1 && mu.cover == X2.cover && mu.twist == ext.eta_twist,
          "mu must be a 1-cochain valued in L");
  require(is_cocycle(mu), "mu is not a cocycle");
  CohClass h0 = zero_class(Twist{l_degree, 0}, 0);
  require(static_cast<int>(eta_h0_coeffs.size()) == h0.dim(),
          "wrong number of section coefficients");
  h0.coeffs = eta_h0_coeffs;
  Cochain eta_sections = class_representative(h0, X2.cover);

  MultiScheme X3 = extend_scheme(X2, ext.reference);
  MultiScheme X3p = extend_scheme(X2, ideal_extension_from_cochain(X2, ext, mu));
  Delta0Result d = delta0(X3, eta_sections.values);
  Delta0Result dp = delta0(X3p, eta_sections.values);

  Delta0ShiftReport rep{.difference = dp.oracle - d.oracle,
                        .cup_cochain = Cochain::zero(1, X2.cover, Twist{2 * l_degree, 0})};
  for (int idx = 0; idx < overlap_count(X2.cover); ++idx) {
    auto [i, j] = overlap_pair(idx);
    rep.cup_cochain.values[static_cast<size_t>(idx)] =
        eta_sections.values[static_cast<size_t>(i)] * mu.values[static_cast<size_t>(idx)];
  }
  rep.equal_mod_coboundary = solve_coboundary(rep.difference - rep.cup_cochain).has_value();
  rep.difference_class_zero = reduce_h1_class(rep.difference).is_zero();
  return rep;
}

namespace {

// Q-coordinates of t^s * column over R^gens, R = Q[t]/(t^n).
std::vector<Rational> shifted_column(const ModulePresentation& M,
                                     const std::vector<std::vector<Rational>>& col, int s) {
  std::vector<Rational> v(static_cast<size_t>(M.gens * M.n));
  for (int g = 0; g < M.gens; ++g)
    for (int k = 0; k + s < M.n; ++k)
      v[static_cast<size_t>(g * M.n + k + s)] = col[static_cast<size_t>(g)][static_cast<size_t>(k)];
  return v;
}

std::vector<std::vector<Rational>> image_basis(const ModulePresentation& M) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& col : M.relations)
    for (int s = 0; s < M.n; ++s) rows.push_back(shifted_column(M, col, s));
  return rows;
}

}  // namespace

std::vector<int> module_filtration_dims(const ModulePresentation& M) {
  auto im = image_basis(M);
  const int rim = matrix_rank(im);
  std::vector<int> dims;
  for (int i = 0; i <= M.n; ++i) {
    auto rows = im;
    for (int g = 0; g < M.gens; ++g)
      for (int k = i; k < M.n; ++k) {
        std::vector<Rational> v(static_cast<size_t>(M.gens * M.n));
        v[static_cast<size_t>(g * M.n + k)] = 1;
        rows.push_back(std::move(v));
      }
    dims.push_back(matrix_rank(rows) - rim);
  }
  return dims;
}

std::vector<int> module_annihilator_dims(const ModulePresentation& M) {
  auto im = image_basis(M);
  const int rim = matrix_rank(im);
  const int dim = M.gens * M.n;
  std::vector<int> dims;
  for (int i = 0; i <= M.n; ++i) {
    // {v : t^i v in im A} via a kernel computation in (v, lambda).
    LinearSystem sys;
    std::vector<int> vvars, lvars;
    for (int c = 0; c < dim; ++c) vvars.push_back(sys.new_var());
    for (size_t b = 0; b < im.size(); ++b) lvars.push_back(sys.new_var());
    std::vector<int> eqids;
    for (int c = 0; c < dim; ++c) eqids.push_back(sys.new_eq());
    for (int g = 0; g < M.gens; ++g)
      for (int k = 0; k + i < M.n; ++k)
        sys.add_coeff(eqids[static_cast<size_t>(g * M.n + k + i)],
                      vvars[static_cast<size_t>(g * M.n + k)], 1);
    for (size_t b = 0; b < im.size(); ++b)
      for (int c = 0; c < dim; ++c)
        sys.add_coeff(eqids[static_cast<size_t>(c)], lvars[b], -im[b][static_cast<size_t>(c)]);
    const int ker = static_cast<int>(sys.kernel_basis().size());
    const int lambda_only = static_cast<int>(im.size()) - rim;
    dims.push_back(ker - lambda_only - rim);
  }
  return dims;
}

std::vector<int> module_type(const ModulePresentation& M) {
  std::vector<int> f = module_filtration_dims(M);
  std::vector<int> type(static_cast<size_t>(M.n));
  // d_i = dim t^i M / t^(i+1) M;  m_j = d_(j-1) - d_j.
  std::vector<int> d(static_cast<size_t>(M.n) + 1);
  for (int i = 0; i < M.n; ++i)
    d[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] - f[static_cast<size_t>(i) + 1];
  for (int j = 1; j <= M.n; ++j)
    type[static_cast<size_t>(j - 1)] = d[static_cast<size_t>(j - 1)] - d[static_cast<size_t>(j)];
  return type;
}

}  // namespace ribbon
