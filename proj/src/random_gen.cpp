#include "ribbon/random_gen.hpp"

namespace ribbon {

int RandomGen::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational RandomGen::rational(int max_abs_num, int max_den) {
  return Rational(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
}

LaurentPoly RandomGen::laurent(int min_exp, int max_exp, int max_terms) {
  LaurentPoly p;
  int terms = uniform(0, max_terms);
  for (int i = 0; i < terms; ++i)
    p += LaurentPoly::monomial(rational(), uniform(min_exp, max_exp));
  return p;
}

LaurentPoly RandomGen::nonzero_laurent(int min_exp, int max_exp, int max_terms) {
  for (;;) {
    LaurentPoly p = laurent(min_exp, max_exp, max_terms);
    if (!p.is_zero()) return p;
  }
}

TruncElem RandomGen::trunc(int n, int min_exp, int max_exp) {
  TruncElem e(n);
  for (int i = 0; i < n; ++i) e.set_coeff(i, laurent(min_exp, max_exp));
  return e;
}

TruncElem RandomGen::unit_trunc(int n, int min_exp, int max_exp) {
  TruncElem e = trunc(n, min_exp, max_exp);
  int num = 0;
  while (num == 0) num = uniform(-6, 6);
  e.set_coeff(0, LaurentPoly::monomial(Rational(num, uniform(1, 4)), uniform(min_exp, max_exp)));
  return e;
}

TruncAuto RandomGen::chart_auto(int n, int alpha0_exp) {
  TruncElem ix(n), it(n);
  ix.set_coeff(0, LaurentPoly::x());
  for (int i = 1; i < n; ++i) ix.set_coeff(i, laurent(-3, 3, 3));
  if (n >= 2) {
    int num = 0;
    while (num == 0) num = uniform(-5, 5);
    it.set_coeff(1, LaurentPoly::monomial(Rational(num, uniform(1, 3)), alpha0_exp) +
                        laurent(alpha0_exp - 2, alpha0_exp + 2, 2));
    // keep alpha^0 a unit: discard non-monomial constant terms
    if (!it.coeff(1).is_unit())
      it.set_coeff(1, LaurentPoly::monomial(Rational(num), alpha0_exp));
    for (int i = 2; i < n; ++i) it.set_coeff(i, laurent(-3, 3, 3));
  }
  return TruncAuto(ix, it);
}

Cochain RandomGen::cochain(int q, Cover cover, Twist twist, int extra_span) {
  Cochain c = Cochain::zero(q, cover, twist);
  int de = effective_degree(twist);
  int lo = std::min(0, de) - extra_span, hi = std::max(0, de) + extra_span;
  for (int s = 0; s < c.slot_count(); ++s) {
    if (q == 0) {
      LaurentPoly p;
      int chart = slot_first_chart(0, s);
      for (int tries = 0; tries < 6; ++tries) {
        int e = uniform(lo, hi);
        if (chart_supports(twist, chart, e)) p += LaurentPoly::monomial(rational(), e);
      }
      c.values[static_cast<size_t>(s)] = p;
    } else {
      c.values[static_cast<size_t>(s)] = laurent(lo, hi, 4);
    }
  }
  return c;
}

Cochain RandomGen::cocycle(int q, Cover cover, Twist twist, int extra_span) {
  int de = effective_degree(twist);
  if (q == 0) {
    // Global sections: f_0 supported in [0, de], transported to the others.
    Cochain c = Cochain::zero(0, cover, twist);
    LaurentPoly f0;
    for (int e = 0; e <= de; ++e)
      if (uniform(0, 1)) f0 += LaurentPoly::monomial(rational(), e);
    c.values[0] = f0;
    c.values[1] = f0.shifted(-twist.d);
    if (cover == Cover::three_charts) c.values[2] = f0;
    return c;
  }
  if (q == 1) {
    Cochain c = cochain(1, cover, twist, extra_span);
    if (cover == Cover::three_charts)
      // sigma_02 = sigma_01 + x^d sigma_12 makes the cocycle relation exact.
      c.values[1] = c.values[0] + c.values[2].shifted(twist.d);
    return c;
  }
  return cochain(q, cover, twist, extra_span);  // q = 2: no condition
}

MultiScheme RandomGen::scheme(int l_degree, int n, Cover cover) {
  if (n == 1) return trivial_scheme(l_degree, 1, cover);
  Cochain D = cocycle(1, cover, Twist{l_degree, 2});
  MultiScheme X = make_double(l_degree, D);
  while (X.n < n) {
    IdealExtensions ext = ideal_extensions(X);
    std::vector<Rational> coeffs;
    for (int k = 0; k < ext.dim; ++k) coeffs.push_back(rational(4, 3));
    X = extend_scheme(X, ideal_extension_cocycle(X, ext, coeffs));
  }
  return X;
}

BundleCocycle RandomGen::line_bundle(const MultiScheme& X, int degree1) {
  BundleCocycle E = pullback_line_bundle(restrict_multiplicity(X, 1), degree1);
  for (int m = 1; m < X.n; ++m) {
    MultiScheme ambient = restrict_multiplicity(X, m + 1);
    Cochain beta = cocycle(1, X.cover, Twist{m * X.l_degree, 0});
    E = extend_bundle(E, ambient, beta);
  }
  return E;
}

}  // namespace ribbon
