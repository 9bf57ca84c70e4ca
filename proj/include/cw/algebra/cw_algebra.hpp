#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cw/algebra/flavor.hpp"
#include "cw/errors.hpp"
#include "cw/exact/sparse_vector.hpp"

namespace cw {

/// u_s for each conjugacy class of simple reflections; equal on conjugate
/// generators by construction.
template <Scalar S>
struct Parameters {
  std::vector<S> per_class;

  static Parameters uniform(const CoxeterSystem& sys, const S& u) {
    return {std::vector<S>(static_cast<std::size_t>(sys.num_simple_classes()), u)};
  }
};

/// C_W(u) (or one of its quotients) acting on itself through the operator
/// formulas on the basis v_{J,w} = e_J g_w. Basis index = class * |W| + w.
template <Scalar S>
class CwAlgebra {
 public:
  using Vec = SparseVector<S>;

  CwAlgebra(const FlavorView& view, Parameters<S> params) : view_(&view), sys_(&view.system()) {
    if (!sys_->has_elements()) throw UnsupportedType("the algebra needs a system built in full mode");
    if (params.per_class.size() != static_cast<std::size_t>(sys_->num_simple_classes()))
      throw BadConfig("expected one parameter per conjugacy class of simple reflections");
    for (int s = 0; s < sys_->rank(); ++s) {
      u_.push_back(params.per_class[static_cast<std::size_t>(sys_->simple_class(s))]);
      um1_.push_back(u_.back() - S::one());
    }
    params_ = std::move(params);
  }

  const FlavorView& view() const { return *view_; }
  const CoxeterSystem& system() const { return *sys_; }
  const Parameters<S>& parameters() const { return params_; }
  const S& u(int s) const { return u_[static_cast<std::size_t>(s)]; }

  std::size_t group_size() const { return sys_->size(); }
  std::size_t dimension() const { return static_cast<std::size_t>(view_->size()) * group_size(); }
  std::uint32_t index(std::uint32_t k, Element w) const {
    return static_cast<std::uint32_t>(k * group_size() + w);
  }
  std::uint32_t class_of(std::uint32_t idx) const { return static_cast<std::uint32_t>(idx / group_size()); }
  Element element_of(std::uint32_t idx) const { return static_cast<Element>(idx % group_size()); }

  // ---- distinguished elements
  Vec basis(std::uint32_t k, Element w, S c = S::one()) const { return Vec::unit(index(k, w), std::move(c)); }
  Vec one() const { return basis(view_->bottom(), CoxeterSystem::identity()); }
  Vec g(int s) const { return basis(view_->bottom(), sys_->simple_element(s)); }
  Vec g_element(Element w) const { return basis(view_->bottom(), w); }
  Vec e(std::uint32_t t) const { return basis(view_->join_reflection(view_->bottom(), t), CoxeterSystem::identity()); }
  Vec e_simple(int s) const { return e(sys_->simple_reflection(s)); }
  Vec e_class(std::uint32_t k) const { return basis(k, CoxeterSystem::identity()); }
  Vec g_inverse(int s) const { return left_g_inverse(s, one()); }

  // ---- left and right operators (the G_s, E_s, G'_s, E'_s of the regular module)
  Vec left_g(int s, const Vec& x) const {
    SparseAccumulator<S> acc;
    for (const auto& [idx, c] : x) {
      const std::uint32_t k = class_of(idx);
      const Element w = element_of(idx);
      const Element sw = sys_->left_mul(s, w);
      const std::uint32_t sks = view_->conj_simple(s, k);
      acc.push(index(sks, sw), c);
      if (sys_->length(sw) < sys_->length(w)) {
        const std::uint32_t ks = view_->join_reflection(sks, sys_->simple_reflection(s));
        S d = c * um1_[static_cast<std::size_t>(s)];
        acc.push(index(ks, sw), d);
        acc.push(index(ks, w), std::move(d));
      }
    }
    return acc.take();
  }

  Vec left_e(std::uint32_t t, const Vec& x) const {
    SparseAccumulator<S> acc;
    for (const auto& [idx, c] : x) acc.push(index(view_->join_reflection(class_of(idx), t), element_of(idx)), c);
    return acc.take();
  }

  Vec left_e_class(std::uint32_t k, const Vec& x) const {
    SparseAccumulator<S> acc;
    for (const auto& [idx, c] : x) acc.push(index(view_->join(class_of(idx), k), element_of(idx)), c);
    return acc.take();
  }

  Vec right_g(const Vec& x, int s) const {
    SparseAccumulator<S> acc;
    const std::uint32_t rs = sys_->simple_reflection(s);
    for (const auto& [idx, c] : x) {
      const std::uint32_t k = class_of(idx);
      const Element w = element_of(idx);
      const Element ws = sys_->right_mul(w, s);
      acc.push(index(k, ws), c);
      if (sys_->length(ws) < sys_->length(w)) {
        const std::uint32_t kt = view_->join_reflection(k, sys_->conjugate_reflection(w, rs));
        S d = c * um1_[static_cast<std::size_t>(s)];
        acc.push(index(kt, ws), d);
        acc.push(index(kt, w), std::move(d));
      }
    }
    return acc.take();
  }

  Vec right_e(const Vec& x, std::uint32_t t) const {
    SparseAccumulator<S> acc;
    for (const auto& [idx, c] : x) {
      const Element w = element_of(idx);
      acc.push(index(view_->join_reflection(class_of(idx), sys_->conjugate_reflection(w, t)), w), c);
    }
    return acc.take();
  }

  /// g_s^{-1} x with g_s^{-1} = g_s + (u_s^{-1} - 1) e_s + (u_s^{-1} - 1) e_s g_s.
  Vec left_g_inverse(int s, const Vec& x) const {
    auto inv = u(s).try_inverse();
    if (!inv) throw DegenerateParameters("u_s is not invertible");
    const S a = *inv - S::one();
    const std::uint32_t t = sys_->simple_reflection(s);
    Vec gx = left_g(s, x);
    Vec out = gx;
    Vec tail = x + gx;
    out.axpy(a, left_e(t, tail));
    return out;
  }

  /// g_w x along the left-greedy reduced word of w.
  Vec left_g_element(Element w, Vec x) const {
    const auto word = sys_->reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_g(*it, x);
    return x;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    // group the terms of x by group element: x = sum_w (sum_k c_k e_k) g_w
    std::map<Element, std::vector<std::pair<std::uint32_t, S>>> by_w;
    for (const auto& [idx, c] : x) by_w[element_of(idx)].emplace_back(class_of(idx), c);
    SparseAccumulator<S> acc;
    for (const auto& [w, terms] : by_w) {
      const Vec gy = left_g_element(w, y);
      for (const auto& [k, c] : terms) acc.push_scaled(c, left_e_class(k, gy));
    }
    return acc.take();
  }

  Vec scalar(const S& c) const { return c * one(); }

 private:
  const FlavorView* view_;
  const CoxeterSystem* sys_;
  Parameters<S> params_;
  std::vector<S> u_;
  std::vector<S> um1_;
};

}  // namespace cw
