#pragma once

#include <filesystem>
#include <optional>

#include "cw/lattice/lattice.hpp"

namespace cw {

inline constexpr int kLatticeCacheVersion = 1;

/// File holding the lattice of `type` under `convention` inside `dir`.
std::filesystem::path lattice_cache_path(const std::filesystem::path& dir, const CoxeterType& type,
                                         RootConvention convention);

/// Reads a cached lattice. Missing, stale or corrupted files yield nullopt.
std::optional<SubgroupLattice> load_cached_lattice(const std::filesystem::path& dir, const CoxeterSystem& sys,
                                                   const LatticeOptions& options = {});

/// Writes atomically (temp file + rename). Errors are swallowed: the cache is advisory.
void store_lattice(const std::filesystem::path& dir, const SubgroupLattice& lattice);

/// Load-or-build. With no directory the cache is bypassed.
SubgroupLattice cached_lattice(const std::optional<std::filesystem::path>& dir, const CoxeterSystem& sys,
                               const LatticeOptions& options = {}, bool* hit = nullptr);

}  // namespace cw
