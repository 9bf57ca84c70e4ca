#pragma once

#include <deque>
#include <string>

#include "cw/algebra/cw_algebra.hpp"
#include "cw/exact/echelon.hpp"

namespace cw {

struct RelationReport {
  bool ok = true;
  std::size_t checks = 0;
  std::string first_failure;

  void record(bool holds, const std::string& what) {
    ++checks;
    if (!holds && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

namespace detail {

template <Scalar S>
std::string where(const CwAlgebra<S>& alg, std::uint32_t idx) {
  return " on basis vector (class " + std::to_string(alg.class_of(idx)) + ", element " +
         std::to_string(alg.element_of(idx)) + ")";
}

}  // namespace detail

/// Verifies the six families of defining relations of C_W(u) as operator
/// identities on every basis vector:
///   braid relations of length m_st; e_t^2 = e_t; e_t e_t' = e_t' e_t;
///   e_t e_t' = e_t e_{t t' t}; g_s e_t = e_{sts} g_s;
///   g_s^2 = 1 + (u_s - 1) e_s (1 + g_s).
template <Scalar S>
RelationReport check_defining_relations(const CwAlgebra<S>& alg) {
  using Vec = typename CwAlgebra<S>::Vec;
  const CoxeterSystem& sys = alg.system();
  const int rank = sys.rank();
  const auto nrefl = static_cast<std::uint32_t>(sys.num_reflections());
  RelationReport rep;
  for (std::uint32_t idx = 0; idx < alg.dimension(); ++idx) {
    const Vec v = Vec::unit(idx);
    const std::string at = detail::where(alg, idx);
    for (int s = 0; s < rank; ++s) {
      for (int t = s + 1; t < rank; ++t) {
        Vec a = v, b = v;
        for (int i = 0; i < sys.coxeter_matrix(s, t); ++i) {
          a = alg.left_g(i % 2 == 0 ? t : s, a);  // word s t s ... applied right to left
          b = alg.left_g(i % 2 == 0 ? s : t, b);
        }
        if (sys.coxeter_matrix(s, t) % 2 == 0) std::swap(a, b);
        rep.record(a == b, "braid relation for generators " + std::to_string(s) + "," + std::to_string(t) + at);
      }
    }
    for (std::uint32_t t = 0; t < nrefl; ++t) {
      const Vec et = alg.left_e(t, v);
      rep.record(alg.left_e(t, et) == et, "e_t idempotent for t=" + std::to_string(t) + at);
      for (std::uint32_t t1 = 0; t1 < nrefl; ++t1) {
        const Vec et1 = alg.left_e(t1, v);
        rep.record(alg.left_e(t, et1) == alg.left_e(t1, et),
                   "e commute for t=" + std::to_string(t) + ", t'=" + std::to_string(t1) + at);
        rep.record(alg.left_e(t, et1) == alg.left_e(t, alg.left_e(sys.conj(t, t1), v)),
                   "e_t e_t' = e_t e_{tt't} for t=" + std::to_string(t) + ", t'=" + std::to_string(t1) + at);
      }
    }
    for (int s = 0; s < rank; ++s) {
      const std::uint32_t rs = sys.simple_reflection(s);
      const Vec gv = alg.left_g(s, v);
      for (std::uint32_t t = 0; t < nrefl; ++t) {
        rep.record(alg.left_g(s, alg.left_e(t, v)) == alg.left_e(sys.conj(rs, t), gv),
                   "g_s e_t = e_{sts} g_s for s=" + std::to_string(s) + ", t=" + std::to_string(t) + at);
      }
      Vec rhs = v;
      rhs.axpy(alg.u(s) - S::one(), alg.left_e(rs, v + gv));
      rep.record(alg.left_g(s, gv) == rhs, "quadratic relation for s=" + std::to_string(s) + at);
    }
  }
  return rep;
}

/// Dimension of the span of all products of g_s and class idempotents
/// e_K applied to v_{0,1}; equals the algebra dimension when the operators
/// act freely on the basis.
template <FieldScalar F>
std::size_t certify_rank(const CwAlgebra<F>& alg) {
  using Vec = SparseVector<F>;
  RowEchelonBasis<F> basis(alg.dimension());
  std::deque<Vec> queue;
  auto offer = [&](Vec v) {
    if (!v.is_zero() && basis.reduce_insert(v)) queue.push_back(std::move(v));
  };
  offer(alg.one());
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (int s = 0; s < alg.system().rank(); ++s) offer(alg.left_g(s, v));
    for (std::uint32_t k = 1; k < alg.view().size(); ++k) offer(alg.left_e_class(k, v));
  }
  return basis.rank();
}

}  // namespace cw
