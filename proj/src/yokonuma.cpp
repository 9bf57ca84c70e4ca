#include "cw/yokonuma/yokonuma.hpp"

namespace cw {

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    index_.emplace(p, perms_.size());
    perms_.push_back(p);
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inv += p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)];
    length_.push_back(inv);
  } while (std::next_permutation(p.begin(), p.end()));
  if (n > 1) {
    left_.resize(perms_.size() * static_cast<std::size_t>(n - 1));
    for (std::size_t w = 0; w < perms_.size(); ++w) {
      for (int i = 0; i + 1 < n; ++i) {
        Perm q = perms_[w];
        for (auto& x : q) x = x == i ? i + 1 : x == i + 1 ? i : x;
        left_[w * static_cast<std::size_t>(n - 1) + static_cast<std::size_t>(i)] = index_.at(q);
      }
    }
  }
}

std::vector<int> SymmetricGroup::reduced_word(std::size_t w) const {
  std::vector<int> word;
  while (length(w) > 0) {
    for (int i = 0; i + 1 < n_; ++i) {
      const std::size_t sw = left_mul(i, w);
      if (length(sw) < length(w)) {
        word.push_back(i);
        w = sw;
        break;
      }
    }
  }
  return word;
}

}  // namespace cw
