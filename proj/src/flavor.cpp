#include "cw/algebra/flavor.hpp"

#include <bit>

namespace cw {

FlavorView::FlavorView(const SubgroupLattice& lattice, Flavor flavor)
    : lat_(&lattice),
      flavor_(flavor),
      nrefl_(lattice.system().num_reflections()),
      rank_(static_cast<std::size_t>(lattice.system().rank())) {
  constexpr std::uint32_t kNone = ~0U;
  compact_.assign(lattice.size(), kNone);
  for (ClassId c = 0; c < lattice.size(); ++c) {
    if (lattice.flavor_closure(flavor, c) != c) continue;
    compact_[c] = static_cast<std::uint32_t>(full_.size());
    full_.push_back(c);
  }
  join_refl_.resize(full_.size() * nrefl_);
  conj_.resize(full_.size() * rank_);
  for (std::uint32_t k = 0; k < full_.size(); ++k) {
    for (std::uint32_t t = 0; t < nrefl_; ++t)
      join_refl_[k * nrefl_ + t] = from_full(lattice.join_reflection(full_[k], t));
    for (std::size_t s = 0; s < rank_; ++s)
      conj_[k * rank_ + s] = compact_[lattice.conj_simple(static_cast<int>(s), full_[k])];
  }
}

std::uint32_t FlavorView::from_bits(ReflectionSet j) const {
  return from_full(lat_->find(dyer_closure(system(), j)));
}

std::uint32_t FlavorView::join(std::uint32_t a, std::uint32_t b) const {
  ReflectionSet extra = bits(b) & ~bits(a);
  while (extra) {
    auto t = static_cast<std::uint32_t>(std::countr_zero(extra));
    extra &= extra - 1;
    if (!(bits(a) & reflection_bit(t))) a = join_reflection(a, t);
  }
  return a;
}

std::uint32_t FlavorView::conj_element(Element w, std::uint32_t k) const {
  return compact_[lat_->conj_element(w, full_[k])];
}

}  // namespace cw
