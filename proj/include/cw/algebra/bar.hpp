#pragma once

#include "cw/algebra/cw_algebra.hpp"
#include "cw/algebra/hecke.hpp"
#include "cw/exact/laurent.hpp"

namespace cw {

/// u_c = v_c^2 with the Laurent variable x_c standing for v_c, one per class
/// of simple reflections.
Parameters<Laurent> bar_parameters(const CoxeterSystem& sys);

/// Bit mask of the Laurent variables used by bar_parameters.
std::uint32_t bar_variable_mask(const CoxeterSystem& sys);

/// v -> v^{-1}, g_s -> g_s^{-1}, e_J fixed. Equivalently H_w -> (H_{w^{-1}})^{-1}
/// with H_s = -v_s^{-1} g_s. The algebra must use bar_parameters.
SparseVector<Laurent> bar_involution(const CwAlgebra<Laurent>& alg, const SparseVector<Laurent>& x);

/// The Kazhdan-Lusztig involution of H_W: v -> v^{-1}, T_w -> (T_{w^{-1}})^{-1}.
SparseVector<Laurent> hecke_bar(const HeckeAlgebra<Laurent>& hecke, const SparseVector<Laurent>& h);

}  // namespace cw
