#pragma once

#include "barosplit/operators.hpp"
#include "barosplit/params.hpp"
#include "barosplit/state.hpp"

namespace barosplit {

/// Right-hand side of the fast subsystem:
///   du    = -(f perp(ubar) + g grad(zeta)) + gbar
///   dzeta = -div(ubar * favg(zeta + H))
struct BarotropicRhs {
    VectorField du;
    CellField dzeta;
};
BarotropicRhs barotropic_rhs(const BarotropicState& state, const VectorField& gbar,
                             const Grid& grid, const PhysicalParams& params);

/// M iterations of the two-stage substep with the forcing frozen. The
/// accumulated flux is assembled inside the loop from the exact stage fluxes,
/// so zeta_final = zeta_initial - dt*div(accumulated_flux) holds to round-off.
SubstepResult barotropic_ssprk2_substep(const BarotropicState& state, const VectorField& gbar,
                                        const Grid& grid, const PhysicalParams& params,
                                        double dt, int M);

/// M iterations of the three-stage substep (convex weights 3/4,1/4 then
/// 1/3,2/3); ledger weights 1/(6M), 1/(6M), 2/(3M) per iteration.
SubstepResult barotropic_ssprk3_substep(const BarotropicState& state, const VectorField& gbar,
                                        const Grid& grid, const PhysicalParams& params,
                                        double dt, int M);

/// Forcing interpolants for the corrector substepping.
VectorField interp2(const VectorField& g0, const VectorField& g1);
VectorField interp3(const VectorField& g0, const VectorField& g1, const VectorField& g_half);

} // namespace barosplit
