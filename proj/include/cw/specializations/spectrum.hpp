#pragma once

#include <array>

#include "cw/algebra/cw_algebra.hpp"
#include "cw/exact/laurent.hpp"
#include "cw/specializations/psi.hpp"

namespace cw {

/// Eigenvectors of left multiplication by g + lambda g e in C_{A_1}(u):
///   a0 = (1+g)(1-e) -> 1,    a1 = e(1+g) -> u(1+lambda),
///   a2 = (g-1)(1-e) -> -1,   a3 = (g-u)e -> -1-lambda.
template <Scalar S>
struct A1Spectrum {
  std::array<SparseVector<S>, 4> vectors;
  std::array<S, 4> eigenvalues;
  std::array<bool, 4> verified{};

  bool all_verified() const { return verified[0] && verified[1] && verified[2] && verified[3]; }
};

template <Scalar S>
A1Spectrum<S> a1_spectrum(const CwAlgebra<S>& alg, const S& lambda) {
  if (alg.system().rank() != 1) throw BadConfig("a1_spectrum needs the algebra of type A1");
  const S& u = alg.u(0);
  const S two_u1 = S::from_int(2) * (u + S::one());
  if (two_u1.is_zero() || (S::is_field && !two_u1.try_inverse()))
    throw DegenerateParameters("2(u+1) is not invertible");
  using Vec = SparseVector<S>;
  const Vec one = alg.one(), g = alg.g(0), e = alg.e_simple(0);
  A1Spectrum<S> out;
  out.vectors[0] = alg.mul(one + g, one - e);
  out.vectors[1] = alg.mul(e, one + g);
  out.vectors[2] = alg.mul(g - one, one - e);
  out.vectors[3] = alg.mul(g - u * one, e);
  out.eigenvalues = {S::one(), u * (S::one() + lambda), -S::one(), -S::one() - lambda};
  for (std::size_t i = 0; i < 4; ++i)
    out.verified[i] = psi_apply(alg, 0, lambda, out.vectors[i]) == out.eigenvalues[i] * out.vectors[i];
  return out;
}

/// Characteristic polynomial and discriminant of g + lambda g e acting on
/// C_{A_1}(u), over Z[u, lambda, X] encoded as Laurent variables
/// x0 = u, x1 = lambda, x2 = X.
struct A1Discriminant {
  Laurent characteristic_polynomial;
  Laurent discriminant;  // Res_X(p, p') for the monic quartic p
  Laurent closed_form;   // 4(l+2)^2 (lu+u-1)^2 (1+u)^2 (1+l)^2 (lu+1+u)^2 l^2
  Rational normalization;  // discriminant / closed_form when proportional, else 0
  bool matches = false;
};

A1Discriminant a1_discriminant();

}  // namespace cw
