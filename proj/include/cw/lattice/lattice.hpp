#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "cw/coxeter/system.hpp"

namespace cw {

/// Set of reflections as a bitset over positive-root indices.
using ReflectionSet = std::uint64_t;
using ClassId = std::uint32_t;

inline constexpr ReflectionSet reflection_bit(std::uint32_t t) { return ReflectionSet{1} << t; }

/// Smallest superset of `j` closed under (t, t') -> t t' t, i.e. R cap <J>.
ReflectionSet dyer_closure(const CoxeterSystem& sys, ReflectionSet j);
/// Closure of closed ∪ extra, where `closed` is already closed.
ReflectionSet dyer_closure(const CoxeterSystem& sys, ReflectionSet closed, ReflectionSet extra);
/// r J r for a reflection r.
ReflectionSet conjugate_set(const CoxeterSystem& sys, std::uint32_t r, ReflectionSet j);

enum class Flavor { full, parabolic, closed };

/// Which root system realizes W(B_n) (and F4, G2) for the closed-subsystem flavor.
enum class RootConvention {
  roots,    ///< the constructed roots (B-convention for B_n)
  coroots,  ///< their duals (C-convention for B_n)
};

struct LatticeOptions {
  std::size_t state_cap = 5'000'000;
  RootConvention convention = RootConvention::roots;
};

/// All reflection subgroups of a finite Coxeter group, as closed reflection
/// sets. Class ids are the ranks of the bitsets in increasing order, so the
/// trivial subgroup is id 0 and the whole group is the last id.
class SubgroupLattice {
 public:
  static SubgroupLattice build(const CoxeterSystem& sys, const LatticeOptions& options = {});

  struct Snapshot {
    std::vector<ReflectionSet> bits;
    std::vector<ClassId> parabolic_closure;
    std::vector<int> parabolic_rank;
    std::vector<ClassId> root_closure;  // empty when not crystallographic
  };
  /// Rebuilds a lattice from stored data; throws BadConfig when inconsistent.
  static SubgroupLattice from_snapshot(const CoxeterSystem& sys, Snapshot snap, const LatticeOptions& options = {});
  Snapshot snapshot() const;

  const CoxeterSystem& system() const { return *sys_; }
  RootConvention convention() const { return convention_; }
  std::size_t size() const { return bits_.size(); }
  ReflectionSet bits(ClassId c) const { return bits_[c]; }
  /// Throws std::out_of_range if `b` is not a closed set.
  ClassId find(ReflectionSet b) const;
  std::optional<ClassId> try_find(ReflectionSet b) const;
  ClassId bottom() const { return 0; }
  ClassId top() const { return static_cast<ClassId>(bits_.size() - 1); }
  bool contains(ClassId big, ClassId small) const { return (bits_[small] & ~bits_[big]) == 0; }

  /// Class of <J, t>.
  ClassId join_reflection(ClassId c, std::uint32_t t) const { return join_table()[static_cast<std::size_t>(c) * nrefl_ + t]; }
  ClassId join(ClassId a, ClassId b) const;
  /// Class of s J s for simple s.
  ClassId conj_simple(int s, ClassId c) const { return conj_simple_[static_cast<std::size_t>(c) * rank_ + static_cast<std::size_t>(s)]; }
  /// Class of w J w^{-1} (full-mode systems only).
  ClassId conj_element(Element w, ClassId c) const;

  std::size_t num_orbits() const { return orbit_reps_.size(); }
  std::size_t orbit_of(ClassId c) const { return orbit_of_[c]; }
  ClassId orbit_rep(std::size_t orbit) const { return orbit_reps_[orbit]; }
  std::size_t orbit_size(std::size_t orbit) const { return orbit_sizes_[orbit]; }
  /// |W| / |orbit|, the order of the normalizer of the subgroup.
  std::uint64_t normalizer_order(ClassId c) const;

  bool is_parabolic(ClassId c) const { return parabolic_closure_[c] == c; }
  ClassId parabolic_closure(ClassId c) const { return parabolic_closure_[c]; }
  /// Rank of the parabolic closure.
  int parabolic_rank(ClassId c) const { return parabolic_rank_[c]; }
  bool has_root_closure() const { return !root_closure_.empty(); }
  /// Throws UnsupportedType for non-crystallographic types.
  ClassId root_closure(ClassId c) const;
  ClassId flavor_closure(Flavor f, ClassId c) const;

  std::size_t bell_full() const { return bits_.size(); }
  std::size_t bell_parabolic() const;
  std::optional<std::size_t> bell_closed() const;

 private:
  SubgroupLattice() = default;
  void finish(const LatticeOptions& options, bool have_flavors);
  void compute_orbits();
  void compute_flavors();
  void check_flavor_compatibility() const;
  const std::vector<ClassId>& join_table() const;
  template <class F>
  std::vector<ClassId> transport_from_reps(F&& rep_value) const;

  const CoxeterSystem* sys_ = nullptr;
  RootConvention convention_ = RootConvention::roots;
  std::size_t nrefl_ = 0;
  std::size_t rank_ = 0;
  std::vector<ReflectionSet> bits_;
  std::vector<ClassId> conj_simple_;
  std::vector<std::size_t> orbit_of_;
  std::vector<ClassId> orbit_reps_;
  std::vector<std::size_t> orbit_sizes_;
  std::vector<ClassId> tree_parent_;  // c = s * tree_parent_[c] * s, s = tree_gen_[c]
  std::vector<int> tree_gen_;
  std::vector<ClassId> bfs_order_;    // orbit reps first, then parents before children
  std::vector<ClassId> parabolic_closure_;
  std::vector<int> parabolic_rank_;
  std::vector<ClassId> root_closure_;

  struct JoinCache {
    std::once_flag once;
    std::vector<ClassId> table;
  };
  std::shared_ptr<JoinCache> join_;
};

/// Closure of a reflection set under root sums, symmetrized (crystallographic types).
ReflectionSet root_subsystem_closure(const CoxeterSystem& sys, ReflectionSet j, RootConvention convention);

struct BellReport {
  CoxeterType type;
  std::uint64_t bell_full = 0;
  std::uint64_t bell_parabolic = 0;
  std::optional<std::uint64_t> bell_closed;
  std::uint64_t algebra_rank = 0;  // |W| * bell_full
};

BellReport bell_report(const SubgroupLattice& lattice);

}  // namespace cw
