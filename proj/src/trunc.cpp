#include "ribbon/trunc.hpp"

#include <stdexcept>

namespace ribbon {

TruncElem::TruncElem(int n, std::vector<LaurentPoly> coeffs) : c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != n) throw std::invalid_argument("coefficient count != n");
}

TruncElem TruncElem::from_laurent(const LaurentPoly& p, int n) {
  TruncElem r(n);
  r.c_[0] = p;
  return r;
}

TruncElem TruncElem::t(int n) {
  if (n < 2) throw std::invalid_argument("t vanishes for n < 2");
  TruncElem r(n);
  r.c_[1] = LaurentPoly::one();
  return r;
}

bool TruncElem::is_zero() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

int TruncElem::order() const {
  for (int i = 0; i < n(); ++i)
    if (!c_[static_cast<size_t>(i)].is_zero()) return i;
  return n();
}

void TruncElem::require_same(const TruncElem& o) const {
  if (n() != o.n()) throw std::invalid_argument("mixed truncation orders");
}

TruncElem TruncElem::truncated(int m) const {
  if (m > n()) throw std::invalid_argument("truncated: m > n");
  TruncElem r(m);
  for (int i = 0; i < m; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
  return r;
}

TruncElem TruncElem::padded(int m) const {
  if (m < n()) throw std::invalid_argument("padded: m < n");
  TruncElem r(m);
  for (int i = 0; i < n(); ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
  return r;
}

TruncElem TruncElem::shifted_t(int k) const {
  TruncElem r(n());
  for (int i = 0; i + k < n(); ++i)
    if (i + k >= 0) r.c_[static_cast<size_t>(i + k)] = c_[static_cast<size_t>(i)];
  return r;
}

TruncElem TruncElem::scaled(const LaurentPoly& p) const {
  TruncElem r(n());
  for (int i = 0; i < n(); ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] * p;
  return r;
}

TruncElem TruncElem::operator-() const {
  TruncElem r(n());
  for (int i = 0; i < n(); ++i) r.c_[static_cast<size_t>(i)] = -c_[static_cast<size_t>(i)];
  return r;
}

TruncElem TruncElem::operator+(const TruncElem& o) const {
  require_same(o);
  TruncElem r(n());
  for (int i = 0; i < n(); ++i)
    r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] + o.c_[static_cast<size_t>(i)];
  return r;
}

TruncElem TruncElem::operator-(const TruncElem& o) const {
  require_same(o);
  TruncElem r(n());
  for (int i = 0; i < n(); ++i)
    r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] - o.c_[static_cast<size_t>(i)];
  return r;
}

TruncElem TruncElem::operator*(const TruncElem& o) const {
  require_same(o);
  TruncElem r(n());
  for (int i = 0; i < n(); ++i) {
    if (c_[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j < n(); ++j) {
      if (o.c_[static_cast<size_t>(j)].is_zero()) continue;
      r.c_[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    }
  }
  return r;
}

TruncElem TruncElem::inverse() const {
  if (!is_unit()) throw std::invalid_argument("inverse of non-unit truncated element");
  // Order-by-order: b0 = 1/a0, b_k = -(sum_{i=1}^{k} a_i b_{k-i}) / a0.
  TruncElem r(n());
  LaurentPoly a0inv = c_[0].inverse();
  r.c_[0] = a0inv;
  for (int k = 1; k < n(); ++k) {
    LaurentPoly s;
    for (int i = 1; i <= k; ++i)
      s += c_[static_cast<size_t>(i)] * r.c_[static_cast<size_t>(k - i)];
    r.c_[static_cast<size_t>(k)] = -(s * a0inv);
  }
  return r;
}

TruncElem TruncElem::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  TruncElem r = from_laurent(LaurentPoly::one(), n());
  TruncElem b = *this;
  int k = e;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

TruncElem Derivation::apply(const TruncElem& a) const {
  TruncElem r(a.n());
  for (int i = 0; i < a.n(); ++i) r.set_coeff(i, apply(a.coeff(i)));
  return r;
}

TruncAuto::TruncAuto(TruncElem image_x, TruncElem image_t)
    : image_x_(std::move(image_x)), image_t_(std::move(image_t)) {
  if (image_x_.n() != image_t_.n()) throw std::invalid_argument("mixed truncation orders");
  if (image_x_.coeff(0) != LaurentPoly::x())
    throw std::invalid_argument("image of x must reduce to x mod t");
  if (!image_t_.coeff(0).is_zero())
    throw std::invalid_argument("image of t must lie in (t)");
  if (n() >= 2 && !image_t_.coeff(1).is_unit())
    throw std::invalid_argument("image of t must be (unit) * t");
}

TruncAuto TruncAuto::identity(int n) {
  TruncElem ix = TruncElem::from_laurent(LaurentPoly::x(), n);
  TruncElem it(n);
  if (n >= 2) it = TruncElem::t(n);
  return TruncAuto(ix, it);
}

TruncElem TruncAuto::alpha() const {
  if (n() < 2) throw std::logic_error("alpha undefined for n < 2");
  TruncElem a(n() - 1);
  for (int i = 0; i + 1 < n(); ++i) a.set_coeff(i, image_t_.coeff(i + 1));
  return a;
}

const TruncElem& TruncAuto::x_power(int e) const {
  auto it = x_powers_.find(e);
  if (it != x_powers_.end()) return it->second;
  TruncElem p(n());
  if (e == 0) {
    p = TruncElem::from_laurent(LaurentPoly::one(), n());
  } else if (e > 0) {
    p = x_power(e - 1) * image_x_;
  } else if (e == -1) {
    p = image_x_.inverse();
  } else {
    p = x_power(e + 1) * x_power(-1);
  }
  return x_powers_.emplace(e, std::move(p)).first->second;
}

TruncElem TruncAuto::apply(const LaurentPoly& f) const {
  TruncElem r(n());
  for (const auto& [e, c] : f.terms()) r = r + x_power(e).scaled(LaurentPoly::constant(c));
  return r;
}

TruncElem TruncAuto::apply(const TruncElem& a) const {
  if (a.n() != n()) throw std::invalid_argument("mixed truncation orders");
  TruncElem r(n());
  TruncElem tpow = TruncElem::from_laurent(LaurentPoly::one(), n());
  for (int i = 0; i < n(); ++i) {
    if (!a.coeff(i).is_zero()) r = r + apply(a.coeff(i)) * tpow;
    if (i + 1 < n()) tpow = tpow * image_t_;
  }
  return r;
}

TruncAuto TruncAuto::compose(const TruncAuto& inner) const {
  return TruncAuto(apply(inner.image_x_), apply(inner.image_t_));
}

TruncAuto TruncAuto::inverse() const {
  const int m = n();
  // Successive approximation in the t-adic filtration, tracking the
  // residual error incrementally. X solves apply(X) = x.
  TruncElem x_elem = TruncElem::from_laurent(LaurentPoly::x(), m);
  TruncElem X = x_elem;
  LaurentPoly a0 = m >= 2 ? alpha0() : LaurentPoly::one();
  TruncElem err = apply(X) - x_elem;
  for (int guard = 0; guard <= m; ++guard) {
    int k = err.order();
    if (k >= m) break;
    if (k == 0) throw std::logic_error("inverse iteration stalled");
    TruncElem corr = TruncElem::from_laurent(err.coeff(k) * a0.pow(-k), m).shifted_t(k);
    X = X - corr;
    err = err - apply(corr);
  }
  if (err.order() < m) throw std::logic_error("inverse iteration diverged");
  // T = B * t solves apply(T) = t.
  TruncElem T(m);
  if (m >= 2) {
    TruncElem B = TruncElem::from_laurent(a0.inverse(), m);
    TruncElem t_elem = TruncElem::t(m);
    err = apply(B) * image_t_ - t_elem;
    for (int guard = 0; guard <= m; ++guard) {
      int k = err.order();
      if (k >= m) break;
      if (k < 2) throw std::logic_error("inverse iteration stalled");
      TruncElem corr = TruncElem::from_laurent(err.coeff(k) * a0.pow(-k), m).shifted_t(k - 1);
      B = B - corr;
      err = err - apply(corr) * image_t_;
    }
    if (err.order() < m) throw std::logic_error("inverse iteration diverged");
    T = B.shifted_t(1);
  }
  // The exact residuals above certify compose(inv) == identity on the
  // generators; verify the other composition explicitly.
  TruncAuto inv(X, T);
  if (!inv.compose(*this).is_identity())
    throw std::logic_error("inverse verification failed");
  return inv;
}

TruncAuto TruncAuto::truncated(int m) const {
  return TruncAuto(image_x_.truncated(m), image_t_.truncated(m));
}

bool TruncAuto::is_identity() const {
  return *this == identity(n());
}

}  // namespace ribbon
