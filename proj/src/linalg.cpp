#include "ribbon/linalg.hpp"

namespace ribbon {

int LinearSystem::new_eq(const Rational& rhs) {
  eqs_.push_back(Eq{{}, rhs});
  return static_cast<int>(eqs_.size()) - 1;
}

void LinearSystem::add_coeff(int eq, int var, const Rational& c) {
  if (c == 0) return;
  auto& a = eqs_.at(static_cast<size_t>(eq)).a;
  auto it = a.find(var);
  if (it == a.end())
    a.emplace(var, c);
  else {
    it->second += c;
    if (it->second == 0) a.erase(it);
  }
}

void LinearSystem::add_rhs(int eq, const Rational& c) {
  eqs_.at(static_cast<size_t>(eq)).rhs += c;
}

std::pair<std::vector<std::vector<Rational>>, std::vector<int>> LinearSystem::rref() const {
  const int w = nvars_ + 1;
  std::vector<std::vector<Rational>> m;
  m.reserve(eqs_.size());
  for (const auto& e : eqs_) {
    std::vector<Rational> row(static_cast<size_t>(w));
    for (const auto& [v, c] : e.a) row[static_cast<size_t>(v)] = c;
    row[static_cast<size_t>(nvars_)] = e.rhs;
    m.push_back(std::move(row));
  }
  std::vector<int> pivots;
  size_t r = 0;
  for (int col = 0; col < nvars_ && r < m.size(); ++col) {
    size_t p = r;
    while (p < m.size() && m[p][static_cast<size_t>(col)] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = Rational(1) / m[r][static_cast<size_t>(col)];
    for (auto& v : m[r]) v *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      Rational f = m[i][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j < w; ++j)
        m[i][static_cast<size_t>(j)] -= f * m[r][static_cast<size_t>(j)];
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::optional<std::vector<Rational>> LinearSystem::solve() const {
  auto [m, pivots] = rref();
  for (size_t i = pivots.size(); i < m.size(); ++i)
    if (m[i][static_cast<size_t>(nvars_)] != 0) return std::nullopt;
  std::vector<Rational> sol(static_cast<size_t>(nvars_));
  for (size_t r = 0; r < pivots.size(); ++r)
    sol[static_cast<size_t>(pivots[r])] = m[r][static_cast<size_t>(nvars_)];
  return sol;
}

std::vector<std::vector<Rational>> LinearSystem::kernel_basis() const {
  auto [m, pivots] = rref();
  std::vector<bool> is_pivot(static_cast<size_t>(nvars_));
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < nvars_; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<size_t>(nvars_));
    v[static_cast<size_t>(f)] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -m[r][static_cast<size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

int LinearSystem::rank() const { return static_cast<int>(rref().second.size()); }

int matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  LinearSystem sys;
  const int w = static_cast<int>(rows[0].size());
  for (int j = 0; j < w; ++j) sys.new_var();
  for (const auto& row : rows) {
    int e = sys.new_eq();
    for (int j = 0; j < w; ++j) sys.add_coeff(e, j, row[static_cast<size_t>(j)]);
  }
  return sys.rank();
}

}  // namespace ribbon
