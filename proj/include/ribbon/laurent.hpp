#pragma once
#include <map>
#include <string>

#include "ribbon/rational.hpp"

namespace ribbon {

// Sparse Laurent polynomial over Q in one variable x, keyed by integer
// exponent. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(const Rational& c, int e);
  static LaurentPoly constant(const Rational& c) { return monomial(c, 0); }
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly x() { return monomial(1, 1); }

  bool is_zero() const { return t_.empty(); }
  // Units of Q[x, 1/x] are exactly the nonzero monomials c x^k.
  bool is_unit() const { return t_.size() == 1; }
  bool is_constant() const;

  const std::map<int, Rational>& terms() const { return t_; }
  Rational coeff(int e) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero

  LaurentPoly shifted(int k) const;  // multiply by x^k
  LaurentPoly derivative() const;    // d/dx
  LaurentPoly inverse() const;       // units only
  LaurentPoly pow(int e) const;      // e < 0 requires a unit

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rational& c) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
  bool operator!=(const LaurentPoly& o) const { return t_ != o.t_; }

  std::string str() const;

 private:
  std::map<int, Rational> t_;
  void set(int e, const Rational& c);
};

}  // namespace ribbon
