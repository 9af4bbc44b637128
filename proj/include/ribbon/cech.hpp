#pragma once
#include <optional>
#include <string>
#include <vector>

#include "ribbon/laurent.hpp"

namespace ribbon {

// Covers of P^1 over Q. Chart 0 is Spec Q[x], chart 1 is Spec Q[y] with
// y = 1/x, chart 2 (three-chart cover only) is the x-line minus the origin.
// All overlap data is written in the coordinate x.
enum class Cover { two_charts = 2, three_charts = 3 };

inline int chart_count(Cover c) { return static_cast<int>(c); }

// Twisting data for a line bundle presented in per-chart frames. The
// chart-0 -> chart-1 transition is x^d (u_02 = 1, u_12 = x^-d). Sections
// over chart 0 have exponents >= 0; sections over chart 1 have exponents
// <= shift1 (0 for O(d) itself; 2 for the d/dx-framed tangent twists;
// -2 for the dx-framed differentials); chart 2 admits any exponent.
struct Twist {
  int d = 0;
  int shift1 = 0;
  bool operator==(const Twist& o) const { return d == o.d && shift1 == o.shift1; }
};

inline Twist operator+(Twist a, Twist b) { return Twist{a.d + b.d, a.shift1 + b.shift1}; }
// Degree of the line bundle the twist data presents.
inline int effective_degree(Twist t) { return t.d + t.shift1; }

// Transition exponent for the ordered increasing pair (i, j).
int twist_exponent(Twist t, int i, int j);
bool chart_supports(Twist t, int chart, int exponent);
bool chart_supported(Twist t, int chart, const LaurentPoly& p);

// Cochain slots in canonical order:
//   q = 0: (0), (1)[, (2)]
//   q = 1: (0,1)[, (0,2), (1,2)]
//   q = 2: (0,1,2)            (three-chart cover only)
// The value on a tuple (i0, ..., iq) is written in the chart-i0 frame.
struct Cochain {
  int q = 0;
  Cover cover = Cover::two_charts;
  Twist twist;
  std::vector<LaurentPoly> values;

  static Cochain zero(int q, Cover cover, Twist twist);
  int slot_count() const { return static_cast<int>(values.size()); }
  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator-() const;
  bool operator==(const Cochain& o) const;
};

int cochain_slot_count(int q, Cover cover);
// First chart index of slot s of a degree-q cochain.
int slot_first_chart(int q, int s);

// Cohomology class of O(deg) on P^1 in the canonical monomial basis:
// H^0 basis {1, x, ..., x^deg}; H^1 basis {x^-1, x^-2, ..., x^(deg+1)}.
struct CohClass {
  Twist twist;
  int index = 1;  // 0 or 1
  std::vector<Rational> coeffs;

  bool is_zero() const;
  int dim() const { return static_cast<int>(coeffs.size()); }
  bool operator==(const CohClass& o) const;
};

CohClass zero_class(Twist t, int index);
// Exponent of the k-th canonical basis monomial.
int basis_exponent(Twist t, int index, int k);

bool is_cocycle(const Cochain& c);
Cochain coboundary(const Cochain& c);
// h^i(P^1, O(d)) in closed form.
int cohomology_dim(int d, int i);
// (h^0, h^1) computed by graded rank counting, independent of the formula.
std::pair<int, int> solver_cohomology_dims(Twist t, Cover cover);

// Canonical representative of the class of a 1-cocycle.
CohClass reduce_h1_class(const Cochain& c);
// Canonical cocycle representing a class (q = index).
Cochain class_representative(const CohClass& cls, Cover cover);

// Solve d(tau) = c for a (q-1)-cochain tau; exact, graded per x-exponent.
// The differential convention: (d nu)_ij = nu_i - u_ij nu_j and
// (d tau)_012 = tau_02 - tau_01 - u_01 tau_12.
std::optional<Cochain> solve_coboundary(const Cochain& c);

// Cup product of two 1-cocycles on the three-chart cover; the (0,1,2)
// component is a_01 * u^b_01 * b_12.
Cochain cup(const Cochain& a, const Cochain& b);

}  // namespace ribbon
