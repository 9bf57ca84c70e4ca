#pragma once

#include <cstdint>
#include <vector>

#include "cw/lattice/lattice.hpp"

namespace cw {

/// The subgroup classes indexing the basis of one flavor of C_W
/// (all reflection subgroups, parabolic ones, or closed subsystems), with
/// joins and conjugation pushed through the flavor's closure map.
class FlavorView {
 public:
  FlavorView(const SubgroupLattice& lattice, Flavor flavor);

  Flavor flavor() const { return flavor_; }
  const SubgroupLattice& lattice() const { return *lat_; }
  const CoxeterSystem& system() const { return lat_->system(); }

  std::uint32_t size() const { return static_cast<std::uint32_t>(full_.size()); }
  ClassId full_id(std::uint32_t k) const { return full_[k]; }
  ReflectionSet bits(std::uint32_t k) const { return lat_->bits(full_[k]); }
  /// Flavor class of the closure of a lattice class.
  std::uint32_t from_full(ClassId c) const { return compact_[lat_->flavor_closure(flavor_, c)]; }
  /// Flavor class of the closure of an arbitrary reflection set.
  std::uint32_t from_bits(ReflectionSet j) const;

  std::uint32_t bottom() const { return 0; }
  std::uint32_t top() const { return size() - 1; }
  std::uint32_t join_reflection(std::uint32_t k, std::uint32_t t) const {
    return join_refl_[static_cast<std::size_t>(k) * nrefl_ + t];
  }
  std::uint32_t join(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t conj_simple(int s, std::uint32_t k) const {
    return conj_[static_cast<std::size_t>(k) * rank_ + static_cast<std::size_t>(s)];
  }
  std::uint32_t conj_element(Element w, std::uint32_t k) const;
  int parabolic_rank(std::uint32_t k) const { return lat_->parabolic_rank(full_[k]); }

 private:
  const SubgroupLattice* lat_;
  Flavor flavor_;
  std::size_t nrefl_;
  std::size_t rank_;
  std::vector<ClassId> full_;
  std::vector<std::uint32_t> compact_;  // lattice id -> flavor id (only for flavor-closed ids)
  std::vector<std::uint32_t> join_refl_;
  std::vector<std::uint32_t> conj_;
};

}  // namespace cw
