#pragma once
#include <random>

#include "ribbon/bundles.hpp"
#include "ribbon/multischeme.hpp"

namespace ribbon {

// Deterministic generators for property tests and the self-test corpus.
class RandomGen {
 public:
  explicit RandomGen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  Rational rational(int max_abs_num = 9, int max_den = 5);
  LaurentPoly laurent(int min_exp = -4, int max_exp = 4, int max_terms = 4);
  LaurentPoly nonzero_laurent(int min_exp = -4, int max_exp = 4, int max_terms = 4);
  TruncElem trunc(int n, int min_exp = -4, int max_exp = 4);
  TruncElem unit_trunc(int n, int min_exp = -3, int max_exp = 3);
  // Chart automorphism: x -> x + higher t-order terms, t -> unit * t + ...
  TruncAuto chart_auto(int n, int alpha0_exp);
  Cochain cochain(int q, Cover cover, Twist twist, int extra_span = 2);
  Cochain cocycle(int q, Cover cover, Twist twist, int extra_span = 2);
  // A valid multiplicity-n scheme built by extending a random double structure.
  MultiScheme scheme(int l_degree, int n, Cover cover = Cover::three_charts);
  // Random rank-1 bundle on X with the given twisting degree at level 1.
  BundleCocycle line_bundle(const MultiScheme& X, int degree1);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ribbon
