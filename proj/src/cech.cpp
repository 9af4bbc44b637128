#include "ribbon/cech.hpp"

#include <stdexcept>

#include "ribbon/linalg.hpp"

namespace ribbon {

namespace {

// Grading offset per chart index: the differential preserves
// exponent + offset(first chart of the tuple).
int grade_offset(Twist t, int chart) { return chart == 1 ? t.d : 0; }

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

int twist_exponent(Twist t, int i, int j) {
  require(i < j && i >= 0 && j <= 2, "twist_exponent: bad pair");
  return grade_offset(t, j) - grade_offset(t, i);
}

bool chart_supports(Twist t, int chart, int exponent) {
  if (chart == 0) return exponent >= 0;
  if (chart == 1) return exponent <= t.shift1;
  return true;
}

bool chart_supported(Twist t, int chart, const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (!chart_supports(t, chart, e)) return false;
  return true;
}

int cochain_slot_count(int q, Cover cover) {
  const bool three = cover == Cover::three_charts;
  switch (q) {
    case 0: return three ? 3 : 2;
    case 1: return three ? 3 : 1;
    case 2: return three ? 1 : 0;
    default: throw std::invalid_argument("cochain degree must be 0, 1 or 2");
  }
}

int slot_first_chart(int q, int s) {
  if (q == 0) return s;
  if (q == 1) return s == 2 ? 1 : 0;
  return 0;
}

Cochain Cochain::zero(int q, Cover cover, Twist twist) {
  Cochain c;
  c.q = q;
  c.cover = cover;
  c.twist = twist;
  c.values.assign(static_cast<size_t>(cochain_slot_count(q, cover)), LaurentPoly());
  return c;
}

Cochain Cochain::operator+(const Cochain& o) const {
  require(q == o.q && cover == o.cover && twist == o.twist, "cochain shape mismatch");
  Cochain r = *this;
  for (size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + (-o); }

Cochain Cochain::operator-() const {
  Cochain r = *this;
  for (auto& v : r.values) v = -v;
  return r;
}

bool Cochain::operator==(const Cochain& o) const {
  return q == o.q && cover == o.cover && twist == o.twist && values == o.values;
}

bool CohClass::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

bool CohClass::operator==(const CohClass& o) const {
  return twist == o.twist && index == o.index && coeffs == o.coeffs;
}

CohClass zero_class(Twist t, int index) {
  CohClass c;
  c.twist = t;
  c.index = index;
  int de = effective_degree(t);
  int dim = index == 0 ? std::max(de + 1, 0) : std::max(-de - 1, 0);
  c.coeffs.assign(static_cast<size_t>(dim), Rational(0));
  return c;
}

int basis_exponent(Twist t, int index, int k) {
  (void)t;
  return index == 0 ? k : -1 - k;
}

static void check_shape(const Cochain& c) {
  require(c.slot_count() == cochain_slot_count(c.q, c.cover), "wrong slot count");
  if (c.q == 0)
    for (int s = 0; s < c.slot_count(); ++s)
      require(chart_supported(c.twist, s, c.values[static_cast<size_t>(s)]),
              "0-cochain value not supported on its chart");
}

bool is_cocycle(const Cochain& c) {
  check_shape(c);
  const int d = c.twist.d;
  if (c.q == 0) {
    // Global section: f_i = u_ij f_j on every overlap.
    const auto& f0 = c.values[0];
    const auto& f1 = c.values[1];
    if (f0 != f1.shifted(d)) return false;
    if (c.cover == Cover::three_charts) {
      const auto& f2 = c.values[2];
      if (f0 != f2) return false;
      if (f1 != f2.shifted(-d)) return false;
    }
    return true;
  }
  if (c.q == 1) {
    if (c.cover == Cover::two_charts) return true;
    // u_01 s_12 + s_01 - s_02 = 0.
    return c.values[2].shifted(d) + c.values[0] - c.values[1] == LaurentPoly();
  }
  return true;  // no quadruple overlaps
}

Cochain coboundary(const Cochain& c) {
  check_shape(c);
  const int d = c.twist.d;
  Cochain r = Cochain::zero(c.q + 1, c.cover, c.twist);
  if (c.q == 0) {
    r.values[0] = c.values[0] - c.values[1].shifted(d);
    if (c.cover == Cover::three_charts) {
      r.values[1] = c.values[0] - c.values[2];
      r.values[2] = c.values[1] - c.values[2].shifted(-d);
    }
  } else if (c.q == 1) {
    if (c.cover == Cover::three_charts)
      r.values[0] = c.values[1] - c.values[0] - c.values[2].shifted(d);
  } else {
    throw std::invalid_argument("coboundary: top degree");
  }
  return r;
}

int cohomology_dim(int d, int i) {
  if (i == 0) return std::max(d + 1, 0);
  if (i == 1) return std::max(-d - 1, 0);
  return 0;
}

std::pair<int, int> solver_cohomology_dims(Twist t, Cover cover) {
  const int de = effective_degree(t);
  const bool three = cover == Cover::three_charts;
  int h0 = 0, h1 = 0;
  const int lo = std::min(0, de) - 2, hi = std::max(0, de) + 2;
  for (int g = lo; g <= hi; ++g) {
    LinearSystem sys;
    int f0 = chart_supports(t, 0, g) ? sys.new_var() : -1;
    int f1 = chart_supports(t, 1, g - t.d) ? sys.new_var() : -1;
    int f2 = three ? sys.new_var() : -1;
    {
      int e = sys.new_eq();
      if (f0 >= 0) sys.add_coeff(e, f0, 1);
      if (f1 >= 0) sys.add_coeff(e, f1, -1);
    }
    if (three) {
      int e02 = sys.new_eq();
      if (f0 >= 0) sys.add_coeff(e02, f0, 1);
      sys.add_coeff(e02, f2, -1);
      int e12 = sys.new_eq();
      if (f1 >= 0) sys.add_coeff(e12, f1, 1);
      sys.add_coeff(e12, f2, -1);
    }
    const int rank = sys.rank();
    h0 += sys.num_vars() - rank;
    h1 += (three ? 2 : 1) - rank;
  }
  return {h0, h1};
}

CohClass reduce_h1_class(const Cochain& c) {
  require(c.q == 1, "reduce_h1_class expects a 1-cochain");
  require(is_cocycle(c), "reduce_h1_class expects a cocycle");
  CohClass cls = zero_class(c.twist, 1);
  for (int k = 0; k < cls.dim(); ++k)
    cls.coeffs[static_cast<size_t>(k)] = c.values[0].coeff(basis_exponent(c.twist, 1, k));
  return cls;
}

Cochain class_representative(const CohClass& cls, Cover cover) {
  Cochain r = Cochain::zero(cls.index, cover, cls.twist);
  LaurentPoly p;
  for (int k = 0; k < cls.dim(); ++k)
    p += LaurentPoly::monomial(cls.coeffs[static_cast<size_t>(k)],
                               basis_exponent(cls.twist, cls.index, k));
  if (cls.index == 1) {
    r.values[0] = p;
    if (cover == Cover::three_charts) r.values[1] = p;  // s_12 = 0
  } else {
    r.values[0] = p;
    r.values[1] = p.shifted(-cls.twist.d);
    if (cover == Cover::three_charts) r.values[2] = p;
  }
  return r;
}

std::optional<Cochain> solve_coboundary(const Cochain& c) {
  check_shape(c);
  require(is_cocycle(c), "solve_coboundary expects a cocycle");
  const int d = c.twist.d;
  const bool three = c.cover == Cover::three_charts;
  Cochain tau = Cochain::zero(c.q - 1, c.cover, c.twist);
  if (c.q == 2) {
    require(three, "2-cochains live on the three-chart cover");
    tau.values[1] = c.values[0];  // tau_02 := v_012
    return tau;
  }
  require(c.q == 1, "solve_coboundary expects degree 1 or 2");
  // Grades present in the input; everything else solves with zero.
  std::map<int, bool> grades;
  for (int s = 0; s < c.slot_count(); ++s) {
    const int off = grade_offset(c.twist, slot_first_chart(1, s));
    for (const auto& [e, k] : c.values[static_cast<size_t>(s)].terms()) grades[e + off] = true;
  }
  for (const auto& [g, unused] : grades) {
    LinearSystem sys;
    int f0 = chart_supports(c.twist, 0, g) ? sys.new_var() : -1;
    int f1 = chart_supports(c.twist, 1, g - d) ? sys.new_var() : -1;
    int f2 = three ? sys.new_var() : -1;
    int e01 = sys.new_eq(c.values[0].coeff(g));
    if (f0 >= 0) sys.add_coeff(e01, f0, 1);
    if (f1 >= 0) sys.add_coeff(e01, f1, -1);
    if (three) {
      int e02 = sys.new_eq(c.values[1].coeff(g));
      if (f0 >= 0) sys.add_coeff(e02, f0, 1);
      sys.add_coeff(e02, f2, -1);
      int e12 = sys.new_eq(c.values[2].coeff(g - d));
      if (f1 >= 0) sys.add_coeff(e12, f1, 1);
      sys.add_coeff(e12, f2, -1);
    }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    if (f0 >= 0) tau.values[0] += LaurentPoly::monomial((*sol)[static_cast<size_t>(f0)], g);
    if (f1 >= 0) tau.values[1] += LaurentPoly::monomial((*sol)[static_cast<size_t>(f1)], g - d);
    if (f2 >= 0) tau.values[2] += LaurentPoly::monomial((*sol)[static_cast<size_t>(f2)], g);
  }
  return tau;
}

Cochain cup(const Cochain& a, const Cochain& b) {
  require(a.q == 1 && b.q == 1, "cup expects 1-cochains");
  require(a.cover == Cover::three_charts && b.cover == Cover::three_charts,
          "cup needs the three-chart cover");
  require(is_cocycle(a) && is_cocycle(b), "cup expects cocycles");
  Cochain r = Cochain::zero(2, Cover::three_charts, a.twist + b.twist);
  r.values[0] = a.values[0] * b.values[2].shifted(b.twist.d);
  return r;
}

}  // namespace ribbon
