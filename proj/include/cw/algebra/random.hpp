#pragma once

#include <random>
#include <type_traits>
#include <vector>

#include "cw/algebra/cw_algebra.hpp"
#include "cw/exact/laurent.hpp"
#include "cw/exact/rational.hpp"

namespace cw {

/// A nonzero integer in [-range, range].
inline long random_nonzero(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range - 1);
  const long v = dist(rng);
  return v >= 0 ? v + 1 : v;
}

/// Small random coefficients: integers for Rational, signed monomials in the
/// first `vars` variables for Laurent.
template <Scalar S>
S random_coefficient(std::mt19937_64& rng, int vars) {
  if constexpr (std::is_same_v<S, Laurent>) {
    std::uniform_int_distribution<int> exp(-2, 2);
    Laurent c(random_nonzero(rng, 3));
    for (int i = 0; i < vars; ++i) c *= Laurent::var(i, exp(rng));
    return c;
  } else {
    (void)vars;
    return S::from_int(random_nonzero(rng, 3));
  }
}

/// Sum of `terms` random basis vectors with random coefficients.
template <Scalar S>
SparseVector<S> random_element(const CwAlgebra<S>& alg, std::mt19937_64& rng, std::size_t terms, int vars = 0) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(alg.dimension() - 1));
  SparseVector<S> x;
  for (std::size_t i = 0; i < terms; ++i) x += SparseVector<S>::unit(pick(rng), random_coefficient<S>(rng, vars));
  return x;
}

/// A positive braid word of length in [1, max_length].
inline std::vector<int> random_word(std::mt19937_64& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> len(1, max_length), gen(0, rank - 1);
  std::vector<int> w(static_cast<std::size_t>(len(rng)));
  for (auto& s : w) s = gen(rng);
  return w;
}

}  // namespace cw
