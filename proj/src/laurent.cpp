#include "ribbon/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ribbon {

Rational rational_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  return Rational(s);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int e) {
  LaurentPoly p;
  p.set(e, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0);
}

Rational LaurentPoly::coeff(int e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (t_.empty()) throw std::logic_error("min_exp of zero");
  return t_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (t_.empty()) throw std::logic_error("max_exp of zero");
  return t_.rbegin()->first;
}

void LaurentPoly::set(int e, const Rational& c) {
  if (c == 0)
    t_.erase(e);
  else
    t_[e] = c;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) r.t_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (const auto& [e, c] : t_)
    if (e != 0) r.set(e - 1, c * e);
  return r;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_unit()) throw std::invalid_argument("inverse of a non-unit Laurent polynomial");
  const auto& [e, c] = *t_.begin();
  return monomial(Rational(1) / c, -e);
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentPoly r = one(), b = *this;
  int k = e;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.t_) set(e, coeff(e) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.t_) set(e, coeff(e) - c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : t_) r.t_[e] = k * c;
  return r;
}

std::string LaurentPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (e != 0) os << "*x^" << e;
  }
  return os.str();
}

}  // namespace ribbon
