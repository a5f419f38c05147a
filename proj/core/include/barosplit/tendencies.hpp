#pragma once

#include <vector>

#include "barosplit/operators.hpp"
#include "barosplit/params.hpp"
#include "barosplit/state.hpp"

namespace barosplit {

/// Layer pressure p_k = p_s + sum_{l<k} rho_l g h_l + 0.5 rho_k g h_k,
/// evaluated top down.
std::vector<CellField> hydrostatic_pressure(const LayerStack& stack, const Grid& grid,
                                            const PhysicalParams& params);

/// Per-layer momentum tendency
///   -grad(KE) - vort*u_perp - (1/rho0) grad(p_k) + horizontal dissipation.
/// The planetary Coriolis term is applied on the split variables by the
/// steppers and is deliberately not part of this tendency; the vorticity here
/// is the relative vorticity interpolated to faces.
std::vector<VectorField> momentum_tendency(const LayerStack& stack, const Grid& grid,
                                           const PhysicalParams& params);

/// Explicit vertical diffusion: interface stresses nu_v * du/dz with zero
/// stress at the surface and c_drag |u_L| u_L at the bottom, differenced back
/// to layers. Thicknesses are face-averaged so the result lives on faces.
std::vector<VectorField> vertical_diffusion(const LayerStack& stack, const Grid& grid,
                                            const PhysicalParams& params);

/// Flux-form thickness tendency -div(favg(h_k) * transport_k) per layer.
std::vector<CellField> thickness_tendency(const std::vector<CellField>& h,
                                          const std::vector<VectorField>& transport,
                                          const Grid& grid);

} // namespace barosplit
