#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cw/lattice/lattice.hpp"
#include "cw/exact/rational.hpp"

namespace cw {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::size_t cases = 0;
  std::string detail;  // first failure, empty on success
};

struct CheckSuite {
  std::vector<CheckResult> results;

  bool ok() const {
    for (const auto& r : results)
      if (!r.ok) return false;
    return !results.empty();
  }
};

/// Defining relations on every basis vector and the rank of the module
/// generated by v_{0,1}. With no parameters given, u_c is an independent
/// Laurent variable per class (rank certified at u = 3, 5, ...).
CheckSuite check_cw_relations(const SubgroupLattice& lattice, Flavor flavor,
                              const std::optional<std::vector<Rational>>& u = std::nullopt);

/// Hecke projection against the T_w oracle on random pairs, the splitting
/// p(q(T_w)) = T_w, the kernel e_J x - x, and (for crystallographic types)
/// the flavor tower full -> closed -> parabolic.
CheckSuite check_hecke(const SubgroupLattice& lattice, std::size_t pairs, std::uint64_t seed);

/// Bar involution: involutive, multiplicative, compatible with the Hecke
/// involution, and the closed formulas for H_s^{-1} and H_s^2.
CheckSuite check_bar(const SubgroupLattice& lattice, std::size_t samples, std::uint64_t seed);

/// lambda = -1 monoid action: b_s^3 = b_s, agreement with g_s - g_s e_s,
/// x/y sign conjugation, positivity on random words, and (when m_01 = 3)
/// b_0^2 b_1^3 b_0^2 = b_0 b_1 b_0 b_1 b_0.
CheckSuite check_monoid(const SubgroupLattice& lattice, std::size_t words, std::uint64_t seed);

/// Relations of Y_{d,n}(u) and the C_{A_{n-1}} relations on its elements,
/// over Q(u).
CheckSuite check_yokonuma(int d, int n);

}  // namespace cw
