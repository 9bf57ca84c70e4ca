#include "cw/exact/dense_modp.hpp"

namespace cw {

namespace {

constexpr std::uint64_t kP = DenseModpEchelon::kP;

inline std::uint64_t fold(std::uint64_t x) { return (x & kP) + (x >> 31); }

inline std::uint64_t full_reduce(std::uint64_t x) {
  x = fold(fold(x));
  return x >= kP ? x - kP : x;
}

std::uint64_t inverse(std::uint64_t a) {
  std::uint64_t e = kP - 2, acc = 1;
  while (e) {
    if (e & 1) acc = full_reduce(acc * a);
    a = full_reduce(a * a);
    e >>= 1;
  }
  return acc;
}

}  // namespace

DenseModpEchelon::DenseModpEchelon(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

bool DenseModpEchelon::reduce_insert(std::vector<std::uint64_t>& v) {
  // Entries are kept below 2^33 between passes; products stay below 2^63.
  std::uint64_t* x = v.data();
  std::size_t lead = dim_;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    std::uint64_t c = full_reduce(x[i]);
    x[i] = c;
    if (c == 0) continue;
    int r = pivot_row_[i];
    if (r < 0) {
      if (lead == dim_) lead = i;
      continue;
    }
    const std::uint32_t* row = rows_.data() + static_cast<std::size_t>(r) * dim_;
    const std::uint64_t m = kP - c;
    x[i] = 0;
    for (std::size_t j = i + 1; j < dim_; ++j) x[j] = fold(x[j] + m * row[j]);
  }
  if (lead == dim_) return false;
  const std::uint64_t inv = inverse(x[lead]);
  const std::size_t base = rows_.size();
  rows_.resize(base + dim_, 0);
  std::uint32_t* out = rows_.data() + base;
  for (std::size_t j = lead; j < dim_; ++j) {
    std::uint64_t c = full_reduce(x[j]);
    out[j] = c == 0 ? 0 : static_cast<std::uint32_t>(full_reduce(c * inv));
  }
  pivot_row_[lead] = static_cast<int>(pivots_.size());
  pivots_.push_back(static_cast<std::uint32_t>(lead));
  return true;
}

}  // namespace cw
