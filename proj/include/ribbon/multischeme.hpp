#pragma once
#include <string>
#include <vector>

#include "ribbon/cech.hpp"
#include "ribbon/trunc.hpp"

namespace ribbon {

// Overlap order: (0,1)[, (0,2), (1,2)].
int overlap_count(Cover cover);
std::pair<int, int> overlap_pair(int idx);
int overlap_index(int i, int j);

// Primitive multiple scheme of multiplicity n over P^1 with associated
// line bundle L = O(l_degree) on the reduced subscheme. Charts are glued
// along U_ij by automorphisms delta_ij of O(U_ij)[t]/(t^n); the conormal
// data is the unit cocycle alpha_ij with delta_ij(t) = alpha_ij t,
// stored redundantly next to the gluing.
struct MultiScheme {
  Cover cover = Cover::two_charts;
  int n = 1;
  int l_degree = 0;
  std::vector<TruncAuto> gluing;  // per overlap
  std::vector<TruncElem> ideal;   // per overlap, n-1 coefficients (n >= 2)

  // l-degree of the transition on the ordered increasing overlap.
  int l_exp(int i, int j) const;
  const TruncAuto& glue(int idx) const { return gluing.at(static_cast<size_t>(idx)); }
  LaurentPoly alpha0(int idx) const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;
  void fail(std::string msg);
};

MultiScheme trivial_scheme(int l_degree, int n, Cover cover = Cover::three_charts);
// Double structure from a 1-cocycle D valued in T tensor L (twist {l, 2}).
MultiScheme make_double(int l_degree, const Cochain& D);
ValidationReport validate_gluing(const MultiScheme& X);
MultiScheme restrict_multiplicity(const MultiScheme& X, int m);
bool schemes_equal(const MultiScheme& a, const MultiScheme& b);

// The order-t derivation cochain of the gluing, valued in T tensor L.
Cochain zeta_cochain(const MultiScheme& X);
// Class of a double structure in H^1(T tensor L) = H^1(O(l+2)).
CohClass double_class(const MultiScheme& X);

// Extensions of the conormal cocycle of X_n to line bundles on X_n:
// theta_ij = alpha_ij + beta_ij t^(n-1) with beta_ij / alpha0_ij a
// 1-cocycle valued in L^(n-1). The torsor is modelled on H^1(L^(n-1)).
struct IdealExtensions {
  int dim = 0;
  Twist eta_twist;                   // {l (n-1), 0}
  std::vector<TruncElem> reference;  // a valid extension, per overlap
  std::vector<CohClass> basis;       // canonical H^1(L^(n-1)) basis
};

IdealExtensions ideal_extensions(const MultiScheme& X);
// theta for the class with the given coefficients in the canonical basis.
std::vector<TruncElem> ideal_extension_cocycle(const MultiScheme& X, const IdealExtensions& ext,
                                               const std::vector<Rational>& coeffs);
// theta for an arbitrary cocycle representative eta (twist {l (n-1), 0}).
std::vector<TruncElem> ideal_extension_from_cochain(const MultiScheme& X,
                                                    const IdealExtensions& ext,
                                                    const Cochain& eta);

// Triple-overlap defect of the uncorrected lifts psi_ij (psi_ij(t) = theta_ij t,
// x-image padded with a zero t^n coefficient): a 2-cochain valued in
// T tensor L^n (twist {l n, 2}).
Cochain scheme_lift_defect(const MultiScheme& X, const std::vector<TruncElem>& theta);

// Extension of X to multiplicity n+1 with conormal extension theta;
// the triple-overlap defect is absorbed by a coboundary witness
// (always possible: H^2 vanishes on a curve).
MultiScheme extend_scheme(const MultiScheme& X, const std::vector<TruncElem>& theta);

struct ObstructionDifference {
  Cochain cup_cochain;        // zeta cup eta, twist {l n, 2}
  CohClass cup_class;         // always zero on P^1
  Cochain cup_witness;        // d(witness) = cup_cochain
  Cochain defect_difference;  // lift defect for theta(eta) minus reference
  bool matches_cup_mod_coboundary = false;
};

// Difference of the two extension obstructions, compared with the cup
// product of the double class with eta.
ObstructionDifference obstruction_difference(const MultiScheme& X, const Cochain& eta);

}  // namespace ribbon
