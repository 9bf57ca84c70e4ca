#pragma once

#include <vector>

#include "cw/algebra/cw_algebra.hpp"

namespace cw {

struct IshiiReport {
  bool first = false;
  bool second = false;
  bool cubic = false;
  bool all() const { return first && second && cubic; }
};

/// Evaluates, with s_i -> g_i in C_{A_2}(u), the two three-strand skein
/// relations of the Links-Gould invariant
///   s1 s2 s1^-1 + s1^-1 s2^-1 s1 + s1 s2 + s1^-1 s2^-1 + s2 s1^-1 + s2^-1 s1
///     = s1 s2^-1 s1^-1 + s1^-1 s2 s1 + s1 s2^-1 + s1^-1 s2 + s2^-1 s1^-1 + s2 s1
/// and
///   s1 s2^-1 s1 - s2 s1^-1 s2 + t0 t1 s2^-1 s1 s2^-1 - t0 t1 s1^-1 s2 s1^-1
///     = -(t0-1)(t1-1)(s2^-1 s1 - s1^-1 s2 + s1 s2^-1 - s2 s1^-1 + s1 - s2 + s2^-1 - s1^-1),
/// together with the cubic (g_i - 1)(g_i + 1)(g_i - u) = 0.
template <Scalar S>
IshiiReport ishii_relations(const CwAlgebra<S>& alg, const S& t0, const S& t1) {
  if (alg.system().type() != CoxeterType::A(2)) throw BadConfig("the Ishii relations live in type A2");
  using Vec = SparseVector<S>;
  const Vec one = alg.one();
  const Vec a = alg.g(0), ai = alg.g_inverse(0), b = alg.g(1), bi = alg.g_inverse(1);
  auto w = [&](std::initializer_list<const Vec*> f) {
    Vec x = one;
    for (const Vec* p : f) x = alg.mul(x, *p);
    return x;
  };
  IshiiReport rep;
  const Vec lhs1 = w({&a, &b, &ai}) + w({&ai, &bi, &a}) + w({&a, &b}) + w({&ai, &bi}) + w({&b, &ai}) + w({&bi, &a});
  const Vec rhs1 = w({&a, &bi, &ai}) + w({&ai, &b, &a}) + w({&a, &bi}) + w({&ai, &b}) + w({&bi, &ai}) + w({&b, &a});
  rep.first = lhs1 == rhs1;

  const S t = t0 * t1;
  Vec lhs2 = w({&a, &bi, &a}) - w({&b, &ai, &b});
  lhs2.axpy(t, w({&bi, &a, &bi}));
  lhs2.axpy(-t, w({&ai, &b, &ai}));
  const Vec bracket = w({&bi, &a}) - w({&ai, &b}) + w({&a, &bi}) - w({&b, &ai}) + a - b + bi - ai;
  const S c = -((t0 - S::one()) * (t1 - S::one()));
  rep.second = lhs2 == c * bracket;

  const S& u = alg.u(0);
  rep.cubic = true;
  for (const Vec* g : {&a, &b}) {
    const Vec cube = alg.mul(alg.mul(*g - one, *g + one), *g - u * one);
    rep.cubic = rep.cubic && cube.is_zero();
  }
  return rep;
}

/// The specialization {t0, t1} = {1, u}.
template <Scalar S>
IshiiReport ishii_check(const CwAlgebra<S>& alg) {
  return ishii_relations(alg, S::one(), alg.u(0));
}

}  // namespace cw
