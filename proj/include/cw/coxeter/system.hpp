#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cw/coxeter/golden.hpp"
#include "cw/coxeter/type.hpp"

namespace cw {

using Element = std::uint32_t;

/// A root image under a group element: positive-root index and sign.
struct SignedRoot {
  std::uint32_t code = 0;  // index << 1 | negative

  static constexpr SignedRoot make(std::uint32_t index, bool negative) { return {index << 1 | (negative ? 1U : 0U)}; }
  constexpr std::uint32_t index() const { return code >> 1; }
  constexpr bool negative() const { return code & 1U; }
  constexpr SignedRoot flipped(bool f) const { return {code ^ (f ? 1U : 0U)}; }
  friend constexpr bool operator==(SignedRoot, SignedRoot) = default;
};

enum class BuildMode {
  full,          ///< enumerate and store every group element
  lattice_only,  ///< reflections and their conjugation table only
};

/// Finite Coxeter system realized as signed permutations of its positive roots.
///
/// Reflections are indexed by positive roots. Element ids follow BFS order
/// from the identity, expanding w -> w*s with s in increasing order.
class CoxeterSystem {
 public:
  static constexpr std::size_t kDefaultElementCap = 3'000'000;
  /// elements x positive roots kept in memory; E7 exceeds this.
  static constexpr std::size_t kStorageCap = 64'000'000;

  static CoxeterSystem build(const CoxeterType& type, BuildMode mode = BuildMode::full,
                             std::size_t element_cap = kDefaultElementCap);

  const CoxeterType& type() const { return type_; }
  int rank() const { return rank_; }
  int coxeter_matrix(int s, int t) const { return coxeter_[static_cast<std::size_t>(s * rank_ + t)]; }
  std::uint64_t group_order() const { return type_.group_order(); }

  // ---- roots and reflections
  std::size_t num_reflections() const { return npos_; }
  std::uint32_t simple_reflection(int s) const { return simple_[static_cast<std::size_t>(s)]; }
  /// -1 if reflection r is not simple.
  int simple_index_of(std::uint32_t r) const { return simple_of_[r]; }
  /// Coordinates in the basis of simple roots. Empty for I2(m), m != 6.
  bool has_root_coordinates() const { return !coords_.empty(); }
  const std::vector<GoldenInt>& root_coordinates(std::uint32_t r) const { return coords_[r]; }
  /// Squared length up to a common factor (1 short, 2 or 3 long); 1 for simply laced.
  int root_norm(std::uint32_t r) const { return norms_[r]; }
  /// Image of positive root p under simple reflection s.
  SignedRoot generator_action(int s, std::uint32_t p) const {
    return gen_action_[static_cast<std::size_t>(s) * npos_ + p];
  }
  /// Signed permutation of positive roots induced by reflection r.
  std::span<const SignedRoot> reflection_permutation(std::uint32_t r) const {
    return {refl_perm_.data() + static_cast<std::size_t>(r) * npos_, npos_};
  }
  /// Index of r t r.
  std::uint32_t conj(std::uint32_t r, std::uint32_t t) const { return conj_[static_cast<std::size_t>(r) * npos_ + t]; }

  int simple_class(int s) const { return simple_class_[static_cast<std::size_t>(s)]; }
  int num_simple_classes() const { return num_simple_classes_; }
  /// Conjugacy class (of simple reflections) containing reflection r.
  int reflection_class(std::uint32_t r) const { return refl_class_[r]; }

  // ---- group elements (full mode only)
  bool has_elements() const { return !length_.empty(); }
  std::size_t size() const { return length_.size(); }
  static constexpr Element identity() { return 0; }
  int length(Element w) const { return length_[w]; }
  Element left_mul(int s, Element w) const { return left_[static_cast<std::size_t>(s) * size() + w]; }
  Element right_mul(Element w, int s) const { return right_[static_cast<std::size_t>(w) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(s)]; }
  Element inverse(Element w) const { return inverse_[w]; }
  Element multiply(Element a, Element b) const;
  Element longest() const { return longest_; }
  Element simple_element(int s) const { return left_mul(s, identity()); }
  bool is_left_descent(int s, Element w) const { return length(left_mul(s, w)) < length(w); }
  bool is_right_descent(Element w, int s) const { return length(right_mul(w, s)) < length(w); }
  /// Left-greedy reduced word: repeatedly strip the smallest left descent.
  std::vector<int> reduced_word(Element w) const;
  Element from_word(std::span<const int> word) const;
  std::span<const SignedRoot> root_permutation(Element w) const {
    return {perm_.data() + static_cast<std::size_t>(w) * npos_, npos_};
  }
  /// Index of w t w^{-1}.
  std::uint32_t conjugate_reflection(Element w, std::uint32_t t) const { return root_permutation(w)[t].index(); }
  /// The group element equal to reflection r.
  Element reflection_element(std::uint32_t r) const { return refl_elem_[r]; }

 private:
  void build_roots();
  void build_reflections();
  void build_elements(std::size_t element_cap);

  CoxeterType type_;
  int rank_ = 0;
  std::size_t npos_ = 0;
  std::vector<int> coxeter_;
  std::vector<std::uint32_t> simple_;
  std::vector<int> simple_of_;
  std::vector<std::vector<GoldenInt>> coords_;
  std::vector<int> norms_;
  std::vector<SignedRoot> gen_action_;
  std::vector<std::uint32_t> root_parent_;  // p = s(parent), npos_ for simple roots
  std::vector<int> root_parent_gen_;
  std::vector<std::uint32_t> root_order_;  // parents before children
  std::vector<SignedRoot> refl_perm_;
  std::vector<std::uint32_t> conj_;
  std::vector<int> simple_class_;
  std::vector<int> refl_class_;
  int num_simple_classes_ = 0;

  std::vector<int> length_;
  std::vector<Element> left_;
  std::vector<Element> right_;
  std::vector<Element> inverse_;
  std::vector<SignedRoot> perm_;
  std::vector<Element> refl_elem_;
  Element longest_ = 0;
};

}  // namespace cw
