#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "cw/exact/scalar.hpp"

namespace cw {

/// Sorted (index, coefficient) pairs with no stored zeros.
template <Scalar S>
class SparseVector {
 public:
  using Entry = std::pair<std::uint32_t, S>;

  SparseVector() = default;

  static SparseVector unit(std::uint32_t index, S c = S::one()) {
    SparseVector v;
    if (!c.is_zero()) v.entries_.emplace_back(index, std::move(c));
    return v;
  }

  /// Sorts, merges repeated indices and drops zeros.
  static SparseVector from_entries(std::vector<Entry> raw) {
    std::stable_sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v;
    v.entries_.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size();) {
      std::uint32_t idx = raw[i].first;
      S acc = std::move(raw[i].second);
      std::size_t j = i + 1;
      for (; j < raw.size() && raw[j].first == idx; ++j) acc = acc + raw[j].second;
      if (!acc.is_zero()) v.entries_.emplace_back(idx, std::move(acc));
      i = j;
    }
    return v;
  }

  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::uint32_t leading_index() const { return entries_.front().first; }

  S coefficient(std::uint32_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::uint32_t i) { return e.first < i; });
    if (it == entries_.end() || it->first != index) return S::zero();
    return it->second;
  }

  /// this += c * x
  SparseVector& axpy(const S& c, const SparseVector& x) {
    if (c.is_zero() || x.is_zero()) return *this;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + x.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < entries_.size() || j < x.entries_.size()) {
      if (j == x.entries_.size() || (i < entries_.size() && entries_[i].first < x.entries_[j].first)) {
        merged.push_back(std::move(entries_[i++]));
      } else if (i == entries_.size() || x.entries_[j].first < entries_[i].first) {
        S t = c * x.entries_[j].second;
        if (!t.is_zero()) merged.emplace_back(x.entries_[j].first, std::move(t));
        ++j;
      } else {
        S t = entries_[i].second + c * x.entries_[j].second;
        if (!t.is_zero()) merged.emplace_back(entries_[i].first, std::move(t));
        ++i;
        ++j;
      }
    }
    entries_ = std::move(merged);
    return *this;
  }

  SparseVector& operator+=(const SparseVector& x) { return axpy(S::one(), x); }
  SparseVector& operator-=(const SparseVector& x) { return axpy(-S::one(), x); }

  SparseVector& scale(const S& c) {
    if (c.is_zero()) {
      entries_.clear();
      return *this;
    }
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (auto& [i, v] : entries_) {
      S t = v * c;
      if (!t.is_zero()) out.emplace_back(i, std::move(t));
    }
    entries_ = std::move(out);
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const S& c, SparseVector a) { return a.scale(c); }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Collects unsorted contributions; `take` canonicalizes once at the end.
template <Scalar S>
class SparseAccumulator {
 public:
  void push(std::uint32_t index, S c) {
    if (!c.is_zero()) raw_.emplace_back(index, std::move(c));
  }
  void push_scaled(const S& c, const SparseVector<S>& v) {
    for (const auto& [i, x] : v) push(i, c * x);
  }
  SparseVector<S> take() {
    auto v = SparseVector<S>::from_entries(std::move(raw_));
    raw_.clear();
    return v;
  }

 private:
  std::vector<typename SparseVector<S>::Entry> raw_;
};

}  // namespace cw
