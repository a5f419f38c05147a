#pragma once

#include <vector>

#include "barosplit/grid.hpp"

namespace barosplit {

/// Per-layer thickness and velocity: the slow 3-D state.
/// Layer 0 is the surface layer; thickness must stay positive.
struct LayerStack {
    std::vector<CellField> h;  ///< layer thickness (m), size L
    std::vector<VectorField> u; ///< layer velocity (m/s), size L

    int layers() const { return static_cast<int>(h.size()); }

    static LayerStack zeros(const Grid& g, int L) {
        LayerStack s;
        s.h.assign(L, CellField::zeros(g));
        s.u.assign(L, VectorField::zeros(g));
        return s;
    }
};

void require_valid(const LayerStack& s, const Grid& g, const char* what);

/// Depth-averaged velocity plus the baroclinic residual per layer.
struct SplitVelocities {
    VectorField ubar;
    std::vector<VectorField> utilde;
};

/// Output of one baroclinic forward-Euler solve: the projected baroclinic
/// velocities and the barotropic forcing recovered by the projection.
struct BaroclinicStepResult {
    std::vector<VectorField> utilde_new;
    VectorField gbar;
    /// max over faces of |sum_k w_k utilde_k| / max(max_face sum_k w_k |utilde_k|, floor)
    double projection_residual = 0.0;
};

/// The fast 2-D state. H is the resting column depth and never changes.
struct BarotropicState {
    VectorField ubar;
    CellField zeta;
    CellField H;
};

/// Result of one barotropic substepping run. accumulated_flux is the exact
/// ledger of the substep fluxes: zeta_final = zeta_initial - dt*div(flux).
struct SubstepResult {
    VectorField ubar_final;
    CellField zeta_final;
    VectorField accumulated_flux;
};

/// Full prognostic model state between slow steps.
struct ModelState {
    LayerStack stack;
    CellField zeta;
    double time = 0.0;
};

} // namespace barosplit
