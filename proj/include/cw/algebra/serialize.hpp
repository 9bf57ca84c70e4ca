#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cw/algebra/cw_algebra.hpp"

namespace cw {

struct SerializedTerm {
  std::string class_bits;  // hex bitset of the reflection set of the class
  Element element;
  std::string coefficient;
};

/// Terms in increasing basis-index order.
template <Scalar S>
std::vector<SerializedTerm> serialize(const CwAlgebra<S>& alg, const SparseVector<S>& x) {
  std::vector<SerializedTerm> out;
  for (const auto& [idx, c] : x) {
    std::ostringstream hex;
    hex << std::hex << alg.view().bits(alg.class_of(idx));
    out.push_back({hex.str(), alg.element_of(idx), c.to_string()});
  }
  return out;
}

}  // namespace cw
