#pragma once
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/rational.hpp"

namespace ribbon {

// Numerical profile of a smooth projective curve together with named
// line bundles. h^0 defaults follow Riemann-Roch with generic behaviour;
// special bundles carry explicit overrides.
struct BundleSpec {
  int degree = 0;
  std::optional<int> h0_override;
};

struct CurveProfile {
  int genus = 0;
  bool hyperelliptic = false;
  std::map<std::string, BundleSpec> bundles;

  const BundleSpec& bundle(const std::string& name) const;
  void add_bundle(const std::string& name, int degree,
                  std::optional<int> h0_override = std::nullopt);
  void add_canonical(const std::string& name = "omega");
};

int h0(const CurveProfile& c, const BundleSpec& b);
int h1(const CurveProfile& c, const BundleSpec& b);
// The tangent twist T_C tensor B.
BundleSpec tangent_twist(const CurveProfile& c, const BundleSpec& b);

// Kunneth dimensions (h^0, h^1, h^2) of L = L_C boxtimes L_D on C x D.
std::array<int, 3> kunneth_dims(const CurveProfile& pc, const CurveProfile& pd,
                                const std::string& lc, const std::string& ld);

// Dimensions of the four Kunneth summands of H^1(T_X tensor L):
// (H0(TC LC) H1(LD), H1(TC LC) H0(LD), H0(LC) H1(TD LD), H1(LC) H0(TD LD)).
std::array<int, 4> tangent_h1_dims(const CurveProfile& pc, const CurveProfile& pd,
                                   const std::string& lc, const std::string& ld);

// Obstruction classes live in H^1(L_C) tensor H^1(L_D); eta1 and eta4 are
// the coordinates of the double structure's class in the (assumed
// one-dimensional) first and fourth Kunneth summands.
struct EtaVector {
  Rational eta1 = 0;
  Rational eta4 = 0;
  std::vector<Rational> eta2;
  std::vector<Rational> eta3;
  int basis_d = 0;  // H^1(L_D) basis index carried by eta1
  int basis_c = 0;  // H^1(L_C) basis index carried by eta4
};

struct PairingData {
  // Columns of the multiplication pairings against the distinguished
  // H^0(T tensor L) generator: phi_c has h^1(L_C) entries, phi_d has
  // h^1(L_D) entries.
  std::vector<Rational> phi_c, phi_d;
};

// Monomial pairing H^0(O(l+2)) x H^1(O(-2)) -> H^1(O(l)) on P^1; requires
// h^0(O(l+2)) = 1, i.e. l = -2.
PairingData p1_pairings(int lc_degree, int ld_degree);

struct ObstructionReport {
  std::vector<std::vector<Rational>> delta;  // h1(L_C) x h1(L_D) matrix
  bool extendable = false;                   // delta == 0
};

// Obstruction against extending M = O(deg_mc, deg_md) to the double
// structure: deg_mc eta1 phi_c (x) e_d + deg_md eta4 e_c (x) phi_d.
ObstructionReport obstruction_surface(const EtaVector& eta, int deg_mc, int deg_md,
                                      const PairingData& pairing);

struct K3Report {
  bool eta_zero = false;
  // Extendable bidegrees (a, b): all, a lattice line, or only (0, 0).
  enum class Lattice { all, line, only_zero } lattice = Lattice::only_zero;
  std::pair<long long, long long> generator{0, 0};
  bool projective = false;
  bool extends_to_x3 = false;
};

// Classification of the double structure on a product of curves with
// K3-type eta: lattice of extendable degrees, projectivity, and the
// multiplicity-3 criterion (g_C - 1) eta1 + (g_D - 1) eta4 = 0.
K3Report k3_classify(const Rational& eta1, const Rational& eta4, bool irrational_ratio,
                     int g_c, int g_d);

struct ThetaExampleReport {
  bool valid = false;
  std::vector<std::string> issues;
  bool every_line_bundle_extends = false;
  bool projective = false;
  std::string x3;  // "true" or "unknown"
};

// Theta-characteristic configuration: L_C a theta characteristic with
// sections, L_D canonical, eta supported in the third summand.
ThetaExampleReport theta_example_check(const CurveProfile& pc, const std::string& theta_name,
                                       const CurveProfile& pd, const std::string& omega_name,
                                       const std::vector<Rational>& eta3);

struct NonbanalReport {
  bool ok = false;
  std::string issue;
  bool pic_nonbanal = false;
  bool moduli_nonbanal = false;
};

// deg L <= 2 - 2g criteria on a curve of genus g; is_canonical marks L = omega.
NonbanalReport nonbanal_predicates(int genus, int deg_l, bool hyperelliptic, bool is_canonical);

struct ModuliRankReport {
  bool ok = false;
  std::string issue;
  int rank = 0;
};

// r^2 (deg L + g - 1) for rank-r bundles over a double structure.
ModuliRankReport moduli_fiber_rank(int rank, int genus, int deg_l);

}  // namespace ribbon
