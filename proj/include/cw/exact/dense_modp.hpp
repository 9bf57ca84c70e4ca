#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cw/exact/prime_field.hpp"

namespace cw {

/// Row echelon basis over F_p, p = 2^31 - 1, with dense rows.
///
/// Meant for large rank jobs (thousands of rows) where sparse rows fill in
/// quickly. Rows are stored at full ambient length; row k has leading 1 at
/// pivots()[k].
class DenseModpEchelon {
 public:
  static constexpr std::uint64_t kP = kDefaultPrime;

  explicit DenseModpEchelon(std::size_t dim);

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  std::span<const std::uint32_t> row(std::size_t k) const {
    return {rows_.data() + k * dim_, dim_};
  }

  /// v holds residues < p and has length dimension(). It is clobbered.
  bool reduce_insert(std::vector<std::uint64_t>& v);

 private:
  std::size_t dim_;
  std::vector<int> pivot_row_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::uint32_t> rows_;
};

}  // namespace cw
