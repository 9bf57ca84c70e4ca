#pragma once

#include <map>
#include <vector>

#include "cw/algebra/cw_algebra.hpp"

namespace cw {

/// The Iwahori-Hecke algebra H_W(u) on the T_w basis, multiplied with the
/// textbook rule T_s T_w = T_{sw} (ascent) or u_s T_{sw} + (u_s - 1) T_w.
template <Scalar S>
class HeckeAlgebra {
 public:
  using Vec = SparseVector<S>;

  HeckeAlgebra(const CoxeterSystem& sys, const Parameters<S>& params) : sys_(&sys) {
    if (!sys.has_elements()) throw UnsupportedType("the Hecke algebra needs a system built in full mode");
    for (int s = 0; s < sys.rank(); ++s) u_.push_back(params.per_class[static_cast<std::size_t>(sys.simple_class(s))]);
  }

  const CoxeterSystem& system() const { return *sys_; }
  std::size_t dimension() const { return sys_->size(); }
  Vec T(Element w) const { return Vec::unit(w); }
  Vec one() const { return T(CoxeterSystem::identity()); }

  Vec left_T(int s, const Vec& x) const {
    SparseAccumulator<S> acc;
    const S& u = u_[static_cast<std::size_t>(s)];
    for (const auto& [w, c] : x) {
      const Element sw = sys_->left_mul(s, w);
      if (sys_->length(sw) > sys_->length(w)) {
        acc.push(sw, c);
      } else {
        acc.push(sw, c * u);
        acc.push(w, c * (u - S::one()));
      }
    }
    return acc.take();
  }

  /// T_s^{-1} = u^{-1} T_s + (u^{-1} - 1).
  Vec left_T_inverse(int s, const Vec& x) const {
    auto inv = u_[static_cast<std::size_t>(s)].try_inverse();
    if (!inv) throw DegenerateParameters("u_s is not invertible");
    Vec out = *inv * left_T(s, x);
    out.axpy(*inv - S::one(), x);
    return out;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    SparseAccumulator<S> acc;
    for (const auto& [w, c] : x) {
      Vec z = y;
      const auto word = sys_->reduced_word(w);
      for (auto it = word.rbegin(); it != word.rend(); ++it) z = left_T(*it, z);
      acc.push_scaled(c, z);
    }
    return acc.take();
  }

 private:
  const CoxeterSystem* sys_;
  std::vector<S> u_;
};

/// e_J g_w -> T_w.
template <Scalar S>
SparseVector<S> hecke_project(const CwAlgebra<S>& alg, const SparseVector<S>& x) {
  SparseAccumulator<S> acc;
  for (const auto& [idx, c] : x) acc.push(alg.element_of(idx), c);
  return acc.take();
}

/// T_w -> g_w e_W.
template <Scalar S>
SparseVector<S> hecke_split(const CwAlgebra<S>& alg, Element w) {
  return alg.mul(alg.g_element(w), alg.e_class(alg.view().top()));
}

template <Scalar S>
SparseVector<S> hecke_split(const CwAlgebra<S>& alg, const SparseVector<S>& h) {
  SparseAccumulator<S> acc;
  for (const auto& [w, c] : h) acc.push_scaled(c, hecke_split(alg, static_cast<Element>(w)));
  return acc.take();
}

/// Pushes an element of one flavor into a coarser flavor of the same lattice.
template <Scalar S>
SparseVector<S> change_flavor(const CwAlgebra<S>& from, const CwAlgebra<S>& to, const SparseVector<S>& x) {
  SparseAccumulator<S> acc;
  for (const auto& [idx, c] : x) {
    const std::uint32_t k = to.view().from_full(from.view().full_id(from.class_of(idx)));
    acc.push(to.index(k, from.element_of(idx)), c);
  }
  return acc.take();
}

}  // namespace cw
