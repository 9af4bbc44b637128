#pragma once
#include <map>
#include <vector>

#include "ribbon/laurent.hpp"

namespace ribbon {

// Element of O(U)[t]/(t^n) with Laurent-polynomial coefficients.
class TruncElem {
 public:
  explicit TruncElem(int n) : c_(static_cast<size_t>(n)) {}
  TruncElem(int n, std::vector<LaurentPoly> coeffs);

  static TruncElem from_laurent(const LaurentPoly& p, int n);
  static TruncElem t(int n);  // the class of t (requires n >= 2)

  int n() const { return static_cast<int>(c_.size()); }
  const LaurentPoly& coeff(int i) const { return c_.at(static_cast<size_t>(i)); }
  void set_coeff(int i, const LaurentPoly& p) { c_.at(static_cast<size_t>(i)) = p; }
  const std::vector<LaurentPoly>& coeffs() const { return c_; }

  bool is_zero() const;
  // Units: constant-in-t part is a Laurent unit.
  bool is_unit() const { return c_[0].is_unit(); }
  // Lowest t-order with nonzero coefficient; n() if zero.
  int order() const;

  TruncElem truncated(int m) const;  // reduce mod t^m (m <= n)
  TruncElem padded(int m) const;     // lift with zero top coefficients (m >= n)
  TruncElem shifted_t(int k) const;  // multiply by t^k
  TruncElem scaled(const LaurentPoly& p) const;

  TruncElem inverse() const;  // units only
  TruncElem pow(int e) const;

  TruncElem operator-() const;
  TruncElem operator+(const TruncElem& o) const;
  TruncElem operator-(const TruncElem& o) const;
  TruncElem operator*(const TruncElem& o) const;
  bool operator==(const TruncElem& o) const { return c_ == o.c_; }
  bool operator!=(const TruncElem& o) const { return c_ != o.c_; }

 private:
  std::vector<LaurentPoly> c_;
  void require_same(const TruncElem& o) const;
};

// Derivation g * d/dx of O(U).
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(LaurentPoly g) : g_(std::move(g)) {}
  const LaurentPoly& g() const { return g_; }
  LaurentPoly apply(const LaurentPoly& f) const { return g_ * f.derivative(); }
  TruncElem apply(const TruncElem& a) const;

 private:
  LaurentPoly g_;
};

// Automorphism of O(U)[t]/(t^n) that is the identity mod t on coordinates:
// x -> image_x with image_x = x mod t, t -> image_t = alpha * t with alpha a unit.
class TruncAuto {
 public:
  TruncAuto(TruncElem image_x, TruncElem image_t);
  static TruncAuto identity(int n);

  int n() const { return image_x_.n(); }
  const TruncElem& image_x() const { return image_x_; }
  const TruncElem& image_t() const { return image_t_; }
  // Unit alpha with image_t = alpha * t, as an element mod t^(n-1) (n >= 2).
  TruncElem alpha() const;
  LaurentPoly alpha0() const { return image_t_.coeff(1); }
  // Coefficient of t in image_x, as a derivation g d/dx.
  Derivation order_t_derivation() const { return Derivation(image_x_.coeff(1)); }

  TruncElem apply(const LaurentPoly& f) const;  // substitution on O(U)
  TruncElem apply(const TruncElem& a) const;

  TruncAuto compose(const TruncAuto& inner) const;  // this after inner
  TruncAuto inverse() const;
  TruncAuto truncated(int m) const;

  bool is_identity() const;
  bool operator==(const TruncAuto& o) const {
    return image_x_ == o.image_x_ && image_t_ == o.image_t_;
  }

 private:
  TruncElem image_x_, image_t_;
  // Lazily computed powers of image_x, shared across apply() calls.
  mutable std::map<int, TruncElem> x_powers_;
  const TruncElem& x_power(int e) const;
};

}  // namespace ribbon
