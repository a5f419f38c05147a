#include "barosplit/barotropic.hpp"

namespace barosplit {

namespace {

/// zeta + H on cells.
CellField free_surface_depth(const CellField& zeta, const CellField& H) {
    return lincomb(1.0, zeta, 1.0, H);
}

void check_state(const VectorField& ubar, const CellField& zeta, const char* stage, int substep) {
    if (!all_finite(ubar) || !all_finite(zeta))
        throw BlowUpError(stage, substep, std::string(stage) + " diverged at substep " +
                                              std::to_string(substep));
}

} // namespace

BarotropicRhs barotropic_rhs(const BarotropicState& state, const VectorField& gbar,
                             const Grid& grid, const PhysicalParams& params) {
    require_shape(state.ubar, grid, "barotropic_rhs");
    require_shape(state.zeta, grid, "barotropic_rhs");
    require_shape(state.H, grid, "barotropic_rhs");
    require_shape(gbar, grid, "barotropic_rhs");

    BarotropicRhs r{VectorField(grid), CellField::zeros(grid)};
    r.du = gbar;
    axpy(-params.f, perp(state.ubar, grid), r.du);
    axpy(-params.g, gradient(state.zeta, grid), r.du);
    const CellField depth = free_surface_depth(state.zeta, state.H);
    r.dzeta = divergence(flux_field(depth, state.ubar, grid), grid);
    for (double& x : r.dzeta.data()) x = -x;
    if (!all_finite(r.du) || !all_finite(r.dzeta))
        throw BlowUpError("barotropic_rhs", -1, "non-finite barotropic tendency");
    return r;
}

namespace {

/// One forward-Euler stage of the fast subsystem with frozen gbar. Returns
/// the flux that produced the zeta update, for the ledger.
VectorField fe_stage(const VectorField& ubar, const CellField& zeta, const CellField& H,
                     const VectorField& gbar, const Grid& grid, const PhysicalParams& params,
                     double delta, VectorField& ubar_out, CellField& zeta_out) {
    VectorField rhs_u = gbar;
    axpy(-params.f, perp(ubar, grid), rhs_u);
    axpy(-params.g, gradient(zeta, grid), rhs_u);
    const VectorField flux = flux_field(free_surface_depth(zeta, H), ubar, grid);
    const CellField div_flux = divergence(flux, grid);

    ubar_out = ubar;
    axpy(delta, rhs_u, ubar_out);
    zeta_out = zeta;
    axpy(-delta, div_flux, zeta_out);
    return flux;
}

} // namespace

SubstepResult barotropic_ssprk2_substep(const BarotropicState& state, const VectorField& gbar,
                                        const Grid& grid, const PhysicalParams& params,
                                        double dt, int M) {
    if (M < 1) throw ConfigError("M", 0, "substep count must be >= 1");
    if (!(dt > 0.0)) throw ConfigError("dt", 0, "dt must be positive");
    require_shape(gbar, grid, "barotropic_ssprk2_substep");

    const double delta = dt / M;
    SubstepResult r{state.ubar, state.zeta, VectorField(grid)};
    VectorField u1(grid), u2(grid);
    CellField z1(grid.nx, grid.ny), z2(grid.nx, grid.ny);
    for (int j = 1; j <= M; ++j) {
        VectorField fluxA = fe_stage(r.ubar_final, r.zeta_final, state.H, gbar, grid, params,
                                     delta, u1, z1);
        VectorField fluxB = fe_stage(u1, z1, state.H, gbar, grid, params, delta, u2, z2);
        r.ubar_final = convex(r.ubar_final, 0.5, u2);
        r.zeta_final = convex(r.zeta_final, 0.5, z2);
        axpy(1.0 / (2.0 * M), fluxA, r.accumulated_flux);
        axpy(1.0 / (2.0 * M), fluxB, r.accumulated_flux);
        check_state(r.ubar_final, r.zeta_final, "barotropic_ssprk2_substep", j);
    }
    return r;
}

SubstepResult barotropic_ssprk3_substep(const BarotropicState& state, const VectorField& gbar,
                                        const Grid& grid, const PhysicalParams& params,
                                        double dt, int M) {
    if (M < 1) throw ConfigError("M", 0, "substep count must be >= 1");
    if (!(dt > 0.0)) throw ConfigError("dt", 0, "dt must be positive");
    require_shape(gbar, grid, "barotropic_ssprk3_substep");

    const double delta = dt / M;
    SubstepResult r{state.ubar, state.zeta, VectorField(grid)};
    VectorField u1(grid), u2(grid), u3(grid);
    CellField z1(grid.nx, grid.ny), z2(grid.nx, grid.ny), z3(grid.nx, grid.ny);
    for (int j = 1; j <= M; ++j) {
        VectorField fluxA = fe_stage(r.ubar_final, r.zeta_final, state.H, gbar, grid, params,
                                     delta, u1, z1);
        VectorField fluxB = fe_stage(u1, z1, state.H, gbar, grid, params, delta, u2, z2);
        VectorField uh = convex(r.ubar_final, 0.25, u2);
        CellField zh = convex(r.zeta_final, 0.25, z2);
        VectorField fluxC = fe_stage(uh, zh, state.H, gbar, grid, params, delta, u3, z3);
        r.ubar_final = convex(r.ubar_final, 2.0 / 3.0, u3);
        r.zeta_final = convex(r.zeta_final, 2.0 / 3.0, z3);
        axpy(1.0 / (6.0 * M), fluxA, r.accumulated_flux);
        axpy(1.0 / (6.0 * M), fluxB, r.accumulated_flux);
        axpy(2.0 / (3.0 * M), fluxC, r.accumulated_flux);
        check_state(r.ubar_final, r.zeta_final, "barotropic_ssprk3_substep", j);
    }
    return r;
}

VectorField interp2(const VectorField& g0, const VectorField& g1) {
    return lincomb(0.5, g0, 0.5, g1);
}

VectorField interp3(const VectorField& g0, const VectorField& g1, const VectorField& g_half) {
    VectorField r = lincomb(1.0 / 6.0, g0, 1.0 / 6.0, g1);
    axpy(2.0 / 3.0, g_half, r);
    return r;
}

} // namespace barosplit
