#include "cw/algebra/bar.hpp"

#include <map>

namespace cw {

Parameters<Laurent> bar_parameters(const CoxeterSystem& sys) {
  if (sys.num_simple_classes() > Laurent::kMaxVars) throw UnsupportedType("too many parameter classes");
  Parameters<Laurent> p;
  for (int c = 0; c < sys.num_simple_classes(); ++c) p.per_class.push_back(Laurent::var(c, 2));
  return p;
}

std::uint32_t bar_variable_mask(const CoxeterSystem& sys) { return (1U << sys.num_simple_classes()) - 1; }

SparseVector<Laurent> bar_involution(const CwAlgebra<Laurent>& alg, const SparseVector<Laurent>& x) {
  const CoxeterSystem& sys = alg.system();
  const std::uint32_t mask = bar_variable_mask(sys);
  std::map<Element, std::vector<std::pair<std::uint32_t, Laurent>>> by_w;
  for (const auto& [idx, c] : x) by_w[alg.element_of(idx)].emplace_back(alg.class_of(idx), c.bar(mask));
  SparseAccumulator<Laurent> acc;
  for (const auto& [w, terms] : by_w) {
    // g_{s_1}^{-1} ... g_{s_r}^{-1} for the reduced word s_1 ... s_r of w
    auto y = alg.one();
    const auto word = sys.reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = alg.left_g_inverse(*it, y);
    for (const auto& [k, c] : terms) acc.push_scaled(c, alg.left_e_class(k, y));
  }
  return acc.take();
}

SparseVector<Laurent> hecke_bar(const HeckeAlgebra<Laurent>& hecke, const SparseVector<Laurent>& h) {
  const CoxeterSystem& sys = hecke.system();
  const std::uint32_t mask = bar_variable_mask(sys);
  SparseAccumulator<Laurent> acc;
  for (const auto& [w, c] : h) {
    auto y = hecke.one();
    const auto word = sys.reduced_word(static_cast<Element>(w));
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = hecke.left_T_inverse(*it, y);
    acc.push_scaled(c.bar(mask), y);
  }
  return acc.take();
}

}  // namespace cw
