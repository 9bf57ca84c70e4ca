#pragma once

#include <vector>

#include "cw/algebra/cw_algebra.hpp"
#include "cw/errors.hpp"
#include "cw/exact/echelon.hpp"
#include "cw/exact/rational.hpp"

namespace cw {

struct SemisimplicityReport {
  std::size_t dimension = 0;
  std::size_t gram_rank = 0;
  bool semisimple = false;
};

/// Regular trace form B(x, y) = tr(L_{xy}) on the basis of C_W(1) (or a
/// quotient flavor) over Q; in characteristic 0 the algebra is semisimple
/// iff B is nondegenerate.
inline SemisimplicityReport semisimplicity_u1(const FlavorView& view, std::size_t cap = 512) {
  const CoxeterSystem& sys = view.system();
  CwAlgebra<Rational> alg(view, Parameters<Rational>::uniform(sys, Rational(1)));
  const std::size_t n = alg.dimension();
  if (n > cap) throw BudgetExceeded("algebra dimension " + std::to_string(n) + " exceeds the trace-form cap");
  using Vec = SparseVector<Rational>;
  // products b_i b_j, computed as g_w applied to b_j followed by e_k
  std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n));
  for (std::uint32_t j = 0; j < n; ++j) {
    const Vec bj = Vec::unit(j);
    for (Element w = 0; w < sys.size(); ++w) {
      const Vec gw = alg.left_g_element(w, bj);
      for (std::uint32_t k = 0; k < view.size(); ++k) prod[alg.index(k, w)][j] = alg.left_e_class(k, gw);
    }
  }
  std::vector<Rational> trace(n, Rational(0));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) trace[i] += prod[i][j].coefficient(j);
  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n, Rational(0)));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (const auto& [k, c] : prod[i][j]) gram[i][j] += c * trace[k];
  SemisimplicityReport rep;
  rep.dimension = n;
  rep.gram_rank = gram_rank(gram);
  rep.semisimple = rep.gram_rank == n;
  return rep;
}

/// Sum over W-orbits of subgroup classes of |orbit|^2 * |N_W(class)|.
inline std::size_t block_dimension_sum(const SubgroupLattice& lat) {
  std::size_t total = 0;
  for (std::uint32_t o = 0; o < lat.num_orbits(); ++o) {
    const std::size_t size = lat.orbit_size(o);
    total += size * size * lat.normalizer_order(lat.orbit_rep(o));
  }
  return total;
}

}  // namespace cw
