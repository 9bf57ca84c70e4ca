#pragma once

#include <cstdint>
#include <vector>

#include "cw/exact/sparse_vector.hpp"

namespace cw {

/// Incremental row echelon form over a field. Each stored row has leading
/// coefficient 1 at its pivot, and pivots are distinct.
template <FieldScalar F>
class RowEchelonBasis {
 public:
  explicit RowEchelonBasis(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector<F>>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

  /// Remainder of v after elimination against the stored rows.
  SparseVector<F> reduce(const SparseVector<F>& v) const {
    if (v.is_zero()) return v;
    std::vector<F> scratch(dim_, F::zero());
    std::vector<char> touched(dim_, 0);
    for (const auto& [i, c] : v) {
      scratch[i] = c;
      touched[i] = 1;
    }
    std::vector<typename SparseVector<F>::Entry> rest;
    for (std::size_t i = v.leading_index(); i < dim_; ++i) {
      if (!touched[i] || scratch[i].is_zero()) continue;
      int r = pivot_row_[i];
      if (r < 0) {
        rest.emplace_back(static_cast<std::uint32_t>(i), scratch[i]);
        continue;
      }
      F factor = scratch[i];
      for (const auto& [j, x] : rows_[static_cast<std::size_t>(r)]) {
        scratch[j] = scratch[j] - factor * x;
        touched[j] = 1;
      }
    }
    return SparseVector<F>::from_entries(std::move(rest));
  }

  bool contains(const SparseVector<F>& v) const { return reduce(v).is_zero(); }

  /// Returns true when v was outside the span (and has been added).
  bool reduce_insert(const SparseVector<F>& v) {
    SparseVector<F> r = reduce(v);
    if (r.is_zero()) return false;
    F inv = *r.entries().front().second.try_inverse();
    r.scale(inv);
    std::uint32_t p = r.leading_index();
    pivot_row_[p] = static_cast<int>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(r));
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<int> pivot_row_;
  std::vector<std::uint32_t> pivots_;
  std::vector<SparseVector<F>> rows_;
};

/// Rank of a dense matrix by Gaussian elimination (the matrix is copied).
template <FieldScalar F>
std::size_t dense_rank(std::vector<std::vector<F>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    F inv = *m[rank][c].try_inverse();
    for (std::size_t k = c; k < cols; ++k) m[rank][k] = m[rank][k] * inv;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      F f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Rank of a symmetric (Gram) matrix.
template <FieldScalar F>
std::size_t gram_rank(const std::vector<std::vector<F>>& gram) {
  return dense_rank<F>(gram);
}

}  // namespace cw
