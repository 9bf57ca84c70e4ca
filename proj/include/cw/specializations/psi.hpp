#pragma once

#include <deque>
#include <optional>
#include <type_traits>
#include <vector>

#include "cw/algebra/cw_algebra.hpp"
#include "cw/errors.hpp"
#include "cw/exact/dense_modp.hpp"
#include "cw/exact/echelon.hpp"
#include "cw/exact/prime_field.hpp"

namespace cw {

/// lambda_s for each conjugacy class of simple reflections.
template <Scalar S>
using LambdaParams = Parameters<S>;

template <Scalar S>
const S& lambda_of(const CoxeterSystem& sys, const LambdaParams<S>& lambda, int s) {
  return lambda.per_class[static_cast<std::size_t>(sys.simple_class(s))];
}

/// Psi(s) x = g_s (1 + lambda_s e_s) x.
template <Scalar S>
SparseVector<S> psi_apply(const CwAlgebra<S>& alg, int s, const S& lambda, const SparseVector<S>& x) {
  SparseVector<S> y = x;
  if (!lambda.is_zero()) y.axpy(lambda, alg.left_e(alg.system().simple_reflection(s), x));
  return alg.left_g(s, y);
}

/// Psi(s)^{-1} x = (1 - lambda_s/(1 + lambda_s) e_s) g_s^{-1} x.
template <Scalar S>
SparseVector<S> psi_inverse_apply(const CwAlgebra<S>& alg, int s, const S& lambda, const SparseVector<S>& x) {
  const S l1 = S::one() + lambda;
  if (l1.is_zero()) throw NonInvertibleLambda("lambda_s = -1: the generator is not invertible");
  auto inv = l1.try_inverse();
  if (!inv) throw NonInvertibleLambda("1 + lambda_s is not invertible in the scalar ring");
  SparseVector<S> y = alg.left_g_inverse(s, x);
  if (!lambda.is_zero()) y.axpy(-(lambda * *inv), alg.left_e(alg.system().simple_reflection(s), y));
  return y;
}

/// The element g_s + lambda_s g_s e_s.
template <Scalar S>
SparseVector<S> psi_generator(const CwAlgebra<S>& alg, int s, const LambdaParams<S>& lambda) {
  return psi_apply(alg, s, lambda_of(alg.system(), lambda, s), alg.one());
}

template <Scalar S>
SparseVector<S> psi_inverse(const CwAlgebra<S>& alg, int s, const LambdaParams<S>& lambda) {
  return psi_inverse_apply(alg, s, lambda_of(alg.system(), lambda, s), alg.one());
}

/// Image of a positive braid word s_1 s_2 ... s_r.
template <Scalar S>
SparseVector<S> psi_word(const CwAlgebra<S>& alg, const std::vector<int>& word, const LambdaParams<S>& lambda) {
  SparseVector<S> x = alg.one();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    x = psi_apply(alg, *it, lambda_of(alg.system(), lambda, *it), x);
  return x;
}

enum class InverseMode {
  automatic,  // include generator inverses unless some lambda_s = -1
  include,
  omit,  // closure under the generators only
};

struct BraidImageOptions {
  InverseMode inverses = InverseMode::automatic;
  std::size_t max_dim = 100000;
};

namespace detail {

template <FieldScalar F>
struct SparseSpan {
  RowEchelonBasis<F> basis;
  explicit SparseSpan(std::size_t dim) : basis(dim) {}
  bool insert(const SparseVector<F>& v) { return basis.reduce_insert(v); }
  std::size_t rank() const { return basis.rank(); }
};

struct DenseSpan {
  DenseModpEchelon basis;
  std::vector<std::uint64_t> scratch;
  explicit DenseSpan(std::size_t dim) : basis(dim), scratch(dim) {}
  bool insert(const SparseVector<Fp31>& v) {
    std::fill(scratch.begin(), scratch.end(), 0);
    for (const auto& [i, c] : v) scratch[i] = c.raw();
    return basis.reduce_insert(scratch);
  }
  std::size_t rank() const { return basis.rank(); }
};

}  // namespace detail

/// Dimension of the unital subalgebra generated by the Psi(s) (and their
/// inverses) inside the algebra: the span of all words applied to 1, grown
/// breadth-first until closed under left multiplication by the generators.
template <FieldScalar F>
std::size_t braid_image_dimension(const CwAlgebra<F>& alg, const LambdaParams<F>& lambda,
                                  const BraidImageOptions& options = {}) {
  const CoxeterSystem& sys = alg.system();
  bool with_inverses = options.inverses == InverseMode::include;
  if (options.inverses == InverseMode::automatic) {
    with_inverses = true;
    for (const F& l : lambda.per_class)
      if ((F::one() + l).is_zero()) with_inverses = false;
  }
  using Span = std::conditional_t<std::is_same_v<F, Fp31>, detail::DenseSpan, detail::SparseSpan<F>>;
  Span span(alg.dimension());
  std::deque<SparseVector<F>> queue;
  auto offer = [&](SparseVector<F> v) {
    if (v.is_zero() || !span.insert(v)) return;
    if (span.rank() > options.max_dim) throw BudgetExceeded("braid image exceeds the dimension cap");
    queue.push_back(std::move(v));
  };
  offer(alg.one());
  while (!queue.empty()) {
    SparseVector<F> v = std::move(queue.front());
    queue.pop_front();
    for (int s = 0; s < sys.rank(); ++s) {
      const F& l = lambda_of(sys, lambda, s);
      offer(psi_apply(alg, s, l, v));
      if (with_inverses) offer(psi_inverse_apply(alg, s, l, v));
    }
  }
  return span.rank();
}

}  // namespace cw
