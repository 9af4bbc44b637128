#pragma once
#include <optional>
#include <vector>

#include "ribbon/multischeme.hpp"

namespace ribbon {

using TruncMat = std::vector<std::vector<TruncElem>>;
using LaurentMat = std::vector<std::vector<LaurentPoly>>;

// Vector bundle on a multiple scheme, given by transition matrices
// theta_ij over the overlaps with theta_ik = theta_ij delta_ij(theta_jk)
// and invertible reduction mod t.
struct BundleCocycle {
  MultiScheme scheme;
  int rank = 1;
  std::vector<TruncMat> transitions;  // per overlap

  const TruncMat& at(int idx) const { return transitions.at(static_cast<size_t>(idx)); }
  // Line-bundle transition on overlap idx.
  const TruncElem& line(int idx) const;
  // Degree of the restriction to the reduced subscheme (line bundles).
  int degree() const;
};

TruncMat mat_identity(int rank, int n);
TruncMat mat_mul(const TruncMat& a, const TruncMat& b);
TruncMat mat_apply(const TruncAuto& g, const TruncMat& m);
TruncMat mat_sub(const TruncMat& a, const TruncMat& b);
bool mat_is_zero(const TruncMat& m);

BundleCocycle make_line_bundle(const MultiScheme& X, const std::vector<TruncElem>& transitions);
BundleCocycle make_bundle(const MultiScheme& X, int rank, std::vector<TruncMat> transitions);
// O(d) pulled back from the reduced subscheme along the canonical lifts.
BundleCocycle pullback_line_bundle(const MultiScheme& X, int d);
ValidationReport validate_bundle(const BundleCocycle& E);
BundleCocycle restrict_bundle(const BundleCocycle& E, int m);
BundleCocycle tensor_line_bundles(const BundleCocycle& a, const BundleCocycle& b);

// Class of (d theta) theta^-1 in H^1(Omega) for a line bundle on the
// reduced P^1; the coefficient against [dx/x] is the degree.
CohClass canonical_class(const BundleCocycle& E);

// Connecting morphism H^0(L^(n-1)) -> H^1(L^n) of
// 0 -> L^n -> O_{X_(n+1)} -> O_{X_n} -> 0, where ambient has multiplicity
// n+1. eta is given by its per-chart sections (chart-0 coordinate).
struct Delta0Result {
  Cochain formula;  // closed form from the gluing data
  Cochain oracle;   // Cech differential of the chartwise lift
  CohClass cls;
  bool agree_mod_coboundary = false;
};
Delta0Result delta0(const MultiScheme& ambient, const std::vector<LaurentPoly>& eta);

// delta0 of an arbitrary global section of O_{X_n} (per-chart elements
// mod t^n), computed from the chartwise lift into the ambient scheme.
Cochain delta0_section(const MultiScheme& ambient, const std::vector<TruncElem>& s);

// Connecting morphism H^1(E restricted) -> H^2(E tensor L) for a bundle
// on a double structure; beta is an E-valued 1-cocycle (column vectors).
struct Delta1Result {
  std::vector<LaurentMat> formula;  // per triple overlap (single slot)
  std::vector<LaurentMat> oracle;
  bool formulas_agree = false;
  bool class_is_zero = false;  // via an explicit witness
};
Delta1Result delta1(const BundleCocycle& E, const std::vector<LaurentMat>& beta);

// Extension of E across X_n -> ambient X_(n+1): the reference lift reuses
// the transition coefficients verbatim and absorbs the triple-overlap
// defect at order t^n; the twisted family is (1 + beta t^n) theta.
BundleCocycle extend_bundle_reference(const BundleCocycle& E, const MultiScheme& ambient);
BundleCocycle extend_bundle(const BundleCocycle& E, const MultiScheme& ambient,
                            const Cochain& beta);  // line bundles

struct IsoResult {
  bool isomorphic = false;
  std::vector<TruncElem> witness;  // per-chart units mu_i
  std::string reason;
};
IsoResult line_bundle_iso(const BundleCocycle& a, const BundleCocycle& b);

// Basis of the global sections of O_{X_n}, as per-chart truncated elements.
std::vector<std::vector<TruncElem>> global_sections_basis(const MultiScheme& X);

struct ExtensionTorsor {
  int torsor_dim = 0;
  int delta0_image_dim = 0;
  int quotient_dim = 0;
  std::vector<CohClass> basis;  // canonical basis of H^1(L^n)
};
// Extension classes of a line bundle across X_n -> ambient.
ExtensionTorsor extension_classes(const BundleCocycle& E, const MultiScheme& ambient);

// Per-level fiber dimensions h^1(L^k) - dim im(delta0_k) of the
// restriction Pic(X_(k+1)) -> Pic(X_k) for trivial schemes, k < n_max.
std::vector<int> picard_ledger(int l_degree, int n_max);

struct Delta0ShiftReport {
  Cochain difference;  // (delta'0 - delta0)(eta)
  Cochain cup_cochain; // chi(eta tensor mu)
  bool equal_mod_coboundary = false;
  bool difference_class_zero = false;
};
// Compare the shift of the connecting morphism under a change of the
// multiplicity-3 extension against the cup pairing, on trivial doubles.
Delta0ShiftReport delta0_shift(int l_degree, const std::vector<Rational>& eta_h0_coeffs,
                               const Cochain& mu);

// Finitely generated Q[t]/(t^n) module presented by relation columns.
struct ModulePresentation {
  int n = 1;
  int gens = 0;
  // relations[c][g] = coefficient vector (length n) of t-powers.
  std::vector<std::vector<std::vector<Rational>>> relations;
};
// Quasi-free type (m_1, ..., m_n) from the filtration t^i M.
std::vector<int> module_type(const ModulePresentation& M);
// dim_Q of t^i M for i = 0..n.
std::vector<int> module_filtration_dims(const ModulePresentation& M);
// dim_Q of the annihilator filtration M^(i) = ker(t^i) for i = 0..n.
std::vector<int> module_annihilator_dims(const ModulePresentation& M);

}  // namespace ribbon
