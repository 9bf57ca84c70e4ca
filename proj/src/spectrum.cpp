#include "cw/specializations/spectrum.hpp"

#include "cw/exact/determinant.hpp"
#include "cw/lattice/lattice.hpp"

namespace cw {

namespace {

constexpr int kU = 0, kLambda = 1, kX = 2;

Laurent closed_form() {
  const Laurent u = Laurent::var(kU), l = Laurent::var(kLambda), one = Laurent::one();
  const Laurent factors = (l + Laurent(2)) * (l * u + u - one) * (one + u) * (one + l) * (l * u + one + u) * l;
  return Laurent(4) * factors * factors;
}

/// Sylvester resultant of two polynomials in X.
Laurent resultant_in_x(const Laurent& p, const Laurent& q) {
  const int m = p.max_degree_in(kX), n = q.max_degree_in(kX);
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Laurent>> syl(size, std::vector<Laurent>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - k)] = p.coefficient_in(kX, k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - k)] = q.coefficient_in(kX, k);
  return determinant_by_minors(syl);
}

}  // namespace

A1Discriminant a1_discriminant() {
  auto sys = CoxeterSystem::build(CoxeterType::A(1));
  auto lat = SubgroupLattice::build(sys);
  FlavorView view(lat, Flavor::full);
  CwAlgebra<Laurent> alg(view, Parameters<Laurent>::uniform(sys, Laurent::var(kU)));
  const Laurent lambda = Laurent::var(kLambda), x = Laurent::var(kX);
  const std::size_t n = alg.dimension();
  // X I - M, where column j of M is psi(b_j)
  std::vector<std::vector<Laurent>> m(n, std::vector<Laurent>(n));
  for (std::uint32_t j = 0; j < n; ++j) {
    m[j][j] = x;
    for (const auto& [i, c] : psi_apply(alg, 0, lambda, SparseVector<Laurent>::unit(j))) m[i][j] -= c;
  }
  A1Discriminant out;
  out.characteristic_polynomial = determinant_by_minors(m);
  const Laurent& p = out.characteristic_polynomial;
  // disc = (-1)^{d(d-1)/2} Res(p, p') for monic p of degree d
  const int d = p.max_degree_in(kX);
  out.discriminant = resultant_in_x(p, p.derivative(kX));
  if ((d * (d - 1) / 2) % 2 == 1) out.discriminant = -out.discriminant;
  out.closed_form = closed_form();
  if (!out.discriminant.is_zero()) {
    // compare the highest terms (terms are sorted ascending)
    const Rational c = out.discriminant.terms().back().coefficient / out.closed_form.terms().back().coefficient;
    if (out.discriminant == Laurent(c) * out.closed_form) {
      out.normalization = c;
      out.matches = true;
    }
  }
  return out;
}

}  // namespace cw
