#include "ribbon/surface.hpp"

#include <numeric>
#include <stdexcept>

#include "ribbon/cech.hpp"

namespace ribbon {

const BundleSpec& CurveProfile::bundle(const std::string& name) const {
  auto it = bundles.find(name);
  if (it == bundles.end()) throw std::invalid_argument("unknown bundle: " + name);
  return it->second;
}

void CurveProfile::add_bundle(const std::string& name, int degree, std::optional<int> h0o) {
  bundles[name] = BundleSpec{degree, h0o};
}

void CurveProfile::add_canonical(const std::string& name) {
  bundles[name] = BundleSpec{2 * genus - 2, genus};
}

int h0(const CurveProfile& c, const BundleSpec& b) {
  const int g = c.genus, d = b.degree;
  int v;
  if (b.h0_override)
    v = *b.h0_override;
  else if (g == 0)
    v = std::max(d + 1, 0);
  else if (d < 0)
    v = 0;
  else if (d == 0)
    v = 1;  // named degree-0 bundles default to the trivial one
  else
    v = std::max(d + 1 - g, 0);  // generic above degree 0
  if (v < std::max(d + 1 - g, 0) || v < 0)
    throw std::invalid_argument("h0 override violates Riemann-Roch");
  return v;
}

int h1(const CurveProfile& c, const BundleSpec& b) {
  return h0(c, b) - (b.degree + 1 - c.genus);
}

BundleSpec tangent_twist(const CurveProfile& c, const BundleSpec& b) {
  return BundleSpec{2 - 2 * c.genus + b.degree, std::nullopt};
}

std::array<int, 3> kunneth_dims(const CurveProfile& pc, const CurveProfile& pd,
                                const std::string& lc, const std::string& ld) {
  const BundleSpec& bc = pc.bundle(lc);
  const BundleSpec& bd = pd.bundle(ld);
  int h0c = h0(pc, bc), h1c = h1(pc, bc), h0d = h0(pd, bd), h1d = h1(pd, bd);
  return {h0c * h0d, h0c * h1d + h1c * h0d, h1c * h1d};
}

std::array<int, 4> tangent_h1_dims(const CurveProfile& pc, const CurveProfile& pd,
                                   const std::string& lc, const std::string& ld) {
  const BundleSpec& bc = pc.bundle(lc);
  const BundleSpec& bd = pd.bundle(ld);
  BundleSpec tc = tangent_twist(pc, bc), td = tangent_twist(pd, bd);
  return {h0(pc, tc) * h1(pd, bd), h1(pc, tc) * h0(pd, bd), h0(pc, bc) * h1(pd, td),
          h1(pc, bc) * h0(pd, td)};
}

PairingData p1_pairings(int lc_degree, int ld_degree) {
  auto column = [](int l) {
    if (l + 3 != 1)
      throw std::invalid_argument("automatic pairing needs a one-dimensional H^0(T tensor L)");
    // Multiply the H^0(T tensor L) generator by the [dx/x] generator of
    // H^1(Omega) and reduce in H^1(O(l)).
    Cochain omega_rep = Cochain::zero(1, Cover::three_charts, Twist{0, -2});
    omega_rep.values[0] = LaurentPoly::monomial(1, -1);
    omega_rep.values[1] = LaurentPoly::monomial(1, -1);
    Cochain prod = Cochain::zero(1, Cover::three_charts, Twist{l, 0});
    for (int s = 0; s < 3; ++s) prod.values[static_cast<size_t>(s)] = omega_rep.values[static_cast<size_t>(s)];
    return reduce_h1_class(prod).coeffs;
  };
  PairingData p;
  p.phi_c = column(lc_degree);
  p.phi_d = column(ld_degree);
  return p;
}

ObstructionReport obstruction_surface(const EtaVector& eta, int deg_mc, int deg_md,
                                      const PairingData& pairing) {
  const int h1c = static_cast<int>(pairing.phi_c.size());
  const int h1d = static_cast<int>(pairing.phi_d.size());
  ObstructionReport rep;
  rep.delta.assign(static_cast<size_t>(h1c),
                   std::vector<Rational>(static_cast<size_t>(h1d), Rational(0)));
  for (int a = 0; a < h1c; ++a)
    for (int b = 0; b < h1d; ++b) {
      Rational v = 0;
      if (b == eta.basis_d) v += eta.eta1 * deg_mc * pairing.phi_c[static_cast<size_t>(a)];
      if (a == eta.basis_c) v += eta.eta4 * deg_md * pairing.phi_d[static_cast<size_t>(b)];
      rep.delta[static_cast<size_t>(a)][static_cast<size_t>(b)] = v;
    }
  rep.extendable = true;
  for (const auto& row : rep.delta)
    for (const auto& v : row)
      if (v != 0) rep.extendable = false;
  return rep;
}

namespace {
long long to_ll(const Integer& v) { return v.convert_to<long long>(); }
}  // namespace

K3Report k3_classify(const Rational& eta1, const Rational& eta4, bool irrational_ratio,
                     int g_c, int g_d) {
  K3Report rep;
  rep.eta_zero = !irrational_ratio && eta1 == 0 && eta4 == 0;
  if (rep.eta_zero) {
    rep.lattice = K3Report::Lattice::all;
    rep.projective = true;
  } else if (irrational_ratio) {
    rep.lattice = K3Report::Lattice::only_zero;
    rep.projective = false;
  } else if (eta1 == 0 || eta4 == 0) {
    rep.lattice = K3Report::Lattice::line;
    rep.generator = eta1 == 0 ? std::make_pair(1LL, 0LL) : std::make_pair(0LL, 1LL);
    rep.projective = false;  // eta1 eta4 = 0 with eta nonzero
  } else {
    rep.lattice = K3Report::Lattice::line;
    // Integer direction of eta1 a + eta4 b = 0: proportional to (eta4, -eta1).
    Integer n1 = numerator(eta1), d1 = denominator(eta1);
    Integer n4 = numerator(eta4), d4 = denominator(eta4);
    Integer a = n4 * d1, b = -n1 * d4;
    Integer g = gcd(a, b);
    a /= g;
    b /= g;
    if (a < 0 || (a == 0 && b < 0)) {
      a = -a;
      b = -b;
    }
    rep.generator = {to_ll(a), to_ll(b)};
    rep.projective = eta1 * eta4 < 0;
  }
  if (irrational_ratio)
    rep.extends_to_x3 = (g_c == 1 && g_d == 1);
  else
    rep.extends_to_x3 = Rational(g_c - 1) * eta1 + Rational(g_d - 1) * eta4 == 0;
  return rep;
}

ThetaExampleReport theta_example_check(const CurveProfile& pc, const std::string& theta_name,
                                       const CurveProfile& pd, const std::string& omega_name,
                                       const std::vector<Rational>& eta3) {
  ThetaExampleReport rep;
  const BundleSpec& th = pc.bundle(theta_name);
  const BundleSpec& om = pd.bundle(omega_name);
  if (pc.genus < 2) rep.issues.push_back("first factor must have genus at least 2");
  if (2 * th.degree != 2 * pc.genus - 2)
    rep.issues.push_back("square of the theta characteristic must be canonical");
  if (h0(pc, th) < 1) rep.issues.push_back("theta characteristic must have sections");
  if (om.degree != 2 * pd.genus - 2 || h0(pd, om) != pd.genus)
    rep.issues.push_back("second bundle must be the canonical bundle");
  const int eta3_dim = h0(pc, th) * h1(pd, BundleSpec{0, 1});  // H0(LC) (x) H1(O_D)
  if (static_cast<int>(eta3.size()) != eta3_dim)
    rep.issues.push_back("eta3 has the wrong ambient dimension");
  rep.valid = rep.issues.empty();
  if (!rep.valid) return rep;
  // eta1 lives in H0(TC tensor theta) (x) H1(omega_D), which vanishes;
  // eta4 is taken zero, so every line bundle extends and X is projective.
  rep.every_line_bundle_extends = true;
  rep.projective = true;
  bool eta3_nonzero = false;
  for (const auto& v : eta3)
    if (v != 0) eta3_nonzero = true;
  rep.x3 = eta3_nonzero ? "true" : "unknown";
  return rep;
}

NonbanalReport nonbanal_predicates(int genus, int deg_l, bool hyperelliptic, bool is_canonical) {
  NonbanalReport rep;
  if (genus < 2) {
    rep.issue = "predicates require genus at least 2";
    return rep;
  }
  rep.ok = true;
  const bool low_degree = !hyperelliptic && deg_l <= 2 - 2 * genus;
  rep.pic_nonbanal = low_degree || is_canonical;
  rep.moduli_nonbanal = !hyperelliptic && deg_l <= 2 - 2 * genus;
  return rep;
}

ModuliRankReport moduli_fiber_rank(int rank, int genus, int deg_l) {
  ModuliRankReport rep;
  if (rank < 1)
    rep.issue = "rank must be positive";
  else if (genus < 2)
    rep.issue = "genus must be at least 2";
  else if (deg_l >= 0)
    rep.issue = "the associated line bundle must have negative degree";
  else if (deg_l + genus - 1 < 0)
    rep.issue = "deg L + g - 1 is negative";
  else {
    rep.ok = true;
    rep.rank = rank * rank * (deg_l + genus - 1);
  }
  return rep;
}

}  // namespace ribbon
