#pragma once

#include <vector>

#include "cw/algebra/cw_algebra.hpp"

namespace cw {

/// b_s = g_s - g_s e_s, through its parameter-free action
/// b_s v_{J,w} = v_{sJs,sw} - v_{sJs+s,sw}.
template <Scalar S>
SparseVector<S> monoid_b(const CwAlgebra<S>& alg, int s, const SparseVector<S>& x) {
  const FlavorView& view = alg.view();
  const CoxeterSystem& sys = alg.system();
  const std::uint32_t rs = sys.simple_reflection(s);
  SparseAccumulator<S> acc;
  for (const auto& [idx, c] : x) {
    const std::uint32_t k = view.conj_simple(s, alg.class_of(idx));
    const Element sw = sys.left_mul(s, alg.element_of(idx));
    acc.push(alg.index(k, sw), c);
    acc.push(alg.index(view.join_reflection(k, rs), sw), -c);
  }
  return acc.take();
}

/// b_{s_1} ... b_{s_r} x.
template <Scalar S>
SparseVector<S> monoid_word(const CwAlgebra<S>& alg, const std::vector<int>& word, SparseVector<S> x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = monoid_b(alg, *it, x);
  return x;
}

/// x_{K,w} -> (-1)^{rk K} x_{K,w}; an involution, so it maps x-coordinates
/// to y-coordinates and back.
template <Scalar S>
SparseVector<S> sign_normalize(const CwAlgebra<S>& alg, const SparseVector<S>& x) {
  std::vector<typename SparseVector<S>::Entry> out;
  for (const auto& [idx, c] : x) {
    const bool odd = alg.view().parabolic_rank(alg.class_of(idx)) % 2 != 0;
    out.emplace_back(idx, odd ? -c : c);
  }
  return SparseVector<S>::from_entries(std::move(out));
}

/// b_s in the y-coordinates of the parabolic quotient:
/// b_s y_{K,w} = y_{sKs,sw} + y_{[sKs+s],sw} when s is not in K, and 0 when it is.
template <Scalar S>
SparseVector<S> positive_b(const CwAlgebra<S>& alg, int s, const SparseVector<S>& y) {
  const FlavorView& view = alg.view();
  if (view.flavor() != Flavor::parabolic) throw BadConfig("the positive form lives on the parabolic quotient");
  const CoxeterSystem& sys = alg.system();
  const std::uint32_t rs = sys.simple_reflection(s);
  SparseAccumulator<S> acc;
  for (const auto& [idx, c] : y) {
    const std::uint32_t k = alg.class_of(idx);
    if (view.bits(k) & reflection_bit(rs)) continue;
    const std::uint32_t sks = view.conj_simple(s, k);
    const Element sw = sys.left_mul(s, alg.element_of(idx));
    acc.push(alg.index(sks, sw), c);
    acc.push(alg.index(view.join_reflection(sks, rs), sw), c);
  }
  return acc.take();
}

template <Scalar S>
SparseVector<S> positive_form(const CwAlgebra<S>& alg, const std::vector<int>& word, SparseVector<S> seed) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) seed = positive_b(alg, *it, seed);
  return seed;
}

}  // namespace cw
