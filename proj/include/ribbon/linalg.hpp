#pragma once
#include <map>
#include <optional>
#include <vector>

#include "ribbon/rational.hpp"

namespace ribbon {

// Dense exact linear algebra over Q for small systems.
class LinearSystem {
 public:
  int new_var() { return nvars_++; }
  int num_vars() const { return nvars_; }
  // Returns the index of a fresh equation with the given right-hand side.
  int new_eq(const Rational& rhs = Rational(0));
  void add_coeff(int eq, int var, const Rational& c);
  void add_rhs(int eq, const Rational& c);

  // A particular solution (free variables set to zero), or nullopt.
  std::optional<std::vector<Rational>> solve() const;
  // Basis of the kernel of the coefficient matrix.
  std::vector<std::vector<Rational>> kernel_basis() const;
  int rank() const;

 private:
  struct Eq {
    std::map<int, Rational> a;
    Rational rhs;
  };
  int nvars_ = 0;
  std::vector<Eq> eqs_;
  // Row-reduce; returns (rref rows incl. rhs column, pivot column per row).
  std::pair<std::vector<std::vector<Rational>>, std::vector<int>> rref() const;
};

int matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace ribbon
