#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cw/exact/scalar.hpp"

namespace cw {

/// Division-free determinant by Laplace expansion along rows, memoized on
/// the set of remaining columns. Works over any commutative ring; cost is
/// O(n 2^n) ring operations, so only for n <= ~16.
template <Scalar R>
R determinant_by_minors(const std::vector<std::vector<R>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return R::one();
  if (n > 20) throw std::invalid_argument("determinant_by_minors: matrix too large");
  std::unordered_map<std::uint32_t, R> memo;
  // det of rows [n - |cols|, n) restricted to the column set `cols`
  auto rec = [&](auto&& self, std::uint32_t cols) -> R {
    if (cols == 0) return R::one();
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(cols));
    R acc = R::zero();
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1U << c))) continue;
      if (!m[row][c].is_zero()) {
        R term = m[row][c] * self(self, cols & ~(1U << c));
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return rec(rec, (1U << n) - 1);
}

}  // namespace cw
