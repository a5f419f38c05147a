#include "barosplit/stepper.hpp"

#include <cmath>

namespace barosplit {

std::string to_string(Scheme s) {
    switch (s) {
    case Scheme::Ssprk2Se: return "SSPRK2-SE";
    case Scheme::Ssprk3Se: return "SSPRK3-SE";
    case Scheme::FeSeBaseline: return "FE-SE-baseline";
    case Scheme::UnsplitSsprk3Reference: return "unsplit-SSPRK3-reference";
    }
    return "?";
}

std::optional<Scheme> parse_scheme(const std::string& name) {
    if (name == "ssprk2se" || name == "SSPRK2-SE" || name == "ssprk2-se")
        return Scheme::Ssprk2Se;
    if (name == "ssprk3se" || name == "SSPRK3-SE" || name == "ssprk3-se")
        return Scheme::Ssprk3Se;
    if (name == "fese" || name == "FE-SE-baseline" || name == "fe-se")
        return Scheme::FeSeBaseline;
    if (name == "unsplit" || name == "unsplit-SSPRK3-reference" || name == "unsplitref")
        return Scheme::UnsplitSsprk3Reference;
    return std::nullopt;
}

void SchemeConfig::validate() const {
    if (!(dt > 0.0)) throw ConfigError("dt", 0, "dt must be positive");
    if (M < 1) throw ConfigError("m", 0, "substep count M must be >= 1");
}

CellField ssh_from_thickness(const std::vector<CellField>& h, const CellField& H) {
    CellField z(H.nx(), H.ny());
    auto& zd = z.data();
    for (const auto& hk : h) {
        const auto& hd = hk.data();
        for (std::size_t n = 0; n < zd.size(); ++n) zd[n] += hd[n];
    }
    const auto& Hd = H.data();
    for (std::size_t n = 0; n < zd.size(); ++n) zd[n] -= Hd[n];
    return z;
}

namespace {

void check_thickness(const std::vector<CellField>& h, const char* stage) {
    for (const auto& hk : h) {
        for (double x : hk.data()) {
            if (!std::isfinite(x)) throw BlowUpError(stage, -1, "non-finite layer thickness");
            if (!(x > 0.0))
                throw BlowUpError(stage, -1, "layer thickness became non-positive");
        }
    }
}

BaroclinicStepResult baroclinic_solve(const LayerStack& stack,
                                      const std::vector<VectorField>& utilde,
                                      const VectorField& ubar, const CellField& zeta,
                                      const Grid& grid, const PhysicalParams& params,
                                      const SchemeConfig& cfg) {
    if (cfg.mixing)
        return baroclinic_feuler_mixing(stack, utilde, ubar, zeta, grid, params, cfg.dt);
    return baroclinic_feuler(stack, utilde, zeta, grid, params, cfg.dt);
}

/// Transport adjustment u^A = scale * (F_zeta - F_h) / W on every face.
VectorField transport_adjustment(const VectorField& F_zeta, const VectorField& F_h,
                                 const VectorField& W, double scale) {
    VectorField a = lincomb(1.0, F_zeta, -1.0, F_h);
    auto& au = a.udata();
    const auto& Wu = W.udata();
    for (std::size_t n = 0; n < au.size(); ++n) au[n] = scale * au[n] / Wu[n];
    auto& av = a.vdata();
    const auto& Wv = W.vdata();
    for (std::size_t n = 0; n < av.size(); ++n) av[n] = scale * av[n] / Wv[n];
    return a;
}

std::vector<VectorField> add_to_each(const std::vector<VectorField>& u, const VectorField& a) {
    std::vector<VectorField> r;
    r.reserve(u.size());
    for (const auto& uk : u) r.push_back(lincomb(1.0, uk, 1.0, a));
    return r;
}

std::vector<VectorField> reconstruct(const VectorField& ubar,
                                     const std::vector<VectorField>& utilde) {
    std::vector<VectorField> r;
    r.reserve(utilde.size());
    for (const auto& ut : utilde) r.push_back(lincomb(1.0, ubar, 1.0, ut));
    return r;
}

void note_projection(StepInfo* info, const BaroclinicStepResult& r) {
    if (info) info->projection_residual = std::max(info->projection_residual,
                                                   r.projection_residual);
}

void note_ssh(StepInfo* info, const std::vector<CellField>& h, const CellField& H,
              const CellField& zeta_sub) {
    if (!info) return;
    const CellField zt = ssh_from_thickness(h, H);
    double m = 0.0;
    const auto& a = zt.data();
    const auto& b = zeta_sub.data();
    for (std::size_t n = 0; n < a.size(); ++n) m = std::max(m, std::abs(a[n] - b[n]));
    info->ssh_residual = m;
    info->has_ssh_residual = true;
}

} // namespace

ModelState ssprk2_se_step(const ModelState& state, const CellField& H, const Grid& grid,
                          const PhysicalParams& params, const SchemeConfig& cfg,
                          StepInfo* info) {
    cfg.validate();
    const int L = state.stack.layers();
    const double dt = cfg.dt;

    const SplitVelocities split = split_velocity(state.stack, grid);

    // Stage 1: baroclinic forward Euler, predictor substepping, thickness.
    const BaroclinicStepResult s1 = baroclinic_solve(state.stack, split.utilde, split.ubar,
                                                     state.zeta, grid, params, cfg);
    note_projection(info, s1);
    const SubstepResult r1 = barotropic_ssprk2_substep({split.ubar, state.zeta, H}, s1.gbar,
                                                       grid, params, dt, cfg.M);
    const std::vector<VectorField> u_hat1 = reconstruct(r1.ubar_final, s1.utilde_new);

    std::vector<VectorField> transport1 = state.stack.u;
    VectorField flux1(grid); // stage-1 layer flux actually applied
    if (cfg.reconcile) {
        const VectorField W_n = column_thickness_on_faces(state.stack.h, grid);
        const VectorField Fh1 = weighted_face_sum(state.stack.h, state.stack.u, grid);
        const VectorField uA1 = transport_adjustment(r1.accumulated_flux, Fh1, W_n, 1.0);
        transport1 = add_to_each(state.stack.u, uA1);
        flux1 = r1.accumulated_flux;
    }
    LayerStack hat;
    hat.h = state.stack.h;
    {
        const auto Th = thickness_tendency(state.stack.h, transport1, grid);
        for (int k = 0; k < L; ++k) axpy(dt, Th[k], hat.h[k]);
    }
    check_thickness(hat.h, "ssprk2_se stage 1 thickness");
    const CellField zeta_hat = ssh_from_thickness(hat.h, H);
    hat.u = u_hat1;

    // Stage 2: baroclinic forward Euler on the hatted state.
    const BaroclinicStepResult s2 =
        baroclinic_solve(hat, s1.utilde_new, r1.ubar_final, zeta_hat, grid, params, cfg);
    note_projection(info, s2);
    std::vector<VectorField> utilde_new(L, VectorField(grid));
    for (int k = 0; k < L; ++k)
        utilde_new[k] = convex(split.utilde[k], 0.5, s2.utilde_new[k]);

    // Corrector substepping with the interpolated forcing.
    const SubstepResult r2 = barotropic_ssprk2_substep(
        {split.ubar, state.zeta, H}, interp2(s1.gbar, s2.gbar), grid, params, dt, cfg.M);

    ModelState out;
    out.time = state.time + dt;
    out.stack.u = reconstruct(r2.ubar_final, utilde_new);

    // Final thickness stage. With reconciliation the stage-2 layer-flux sum is
    // measured against the flux the stage-1 update actually applied, so the
    // final zeta matches the corrector substepping exactly.
    std::vector<VectorField> transport2 = out.stack.u;
    if (cfg.reconcile) {
        const VectorField W_hat = column_thickness_on_faces(hat.h, grid);
        const VectorField Fh2 =
            lincomb(0.5, flux1, 0.5, weighted_face_sum(hat.h, out.stack.u, grid));
        const VectorField uA2 = transport_adjustment(r2.accumulated_flux, Fh2, W_hat, 2.0);
        transport2 = add_to_each(out.stack.u, uA2);
    }
    out.stack.h = state.stack.h;
    {
        const auto Th = thickness_tendency(hat.h, transport2, grid);
        for (int k = 0; k < L; ++k) {
            CellField h2 = hat.h[k];
            axpy(dt, Th[k], h2);
            out.stack.h[k] = convex(state.stack.h[k], 0.5, h2);
        }
    }
    check_thickness(out.stack.h, "ssprk2_se stage 2 thickness");
    out.zeta = ssh_from_thickness(out.stack.h, H);
    note_ssh(info, out.stack.h, H, r2.zeta_final);
    return out;
}

ModelState ssprk3_se_step(const ModelState& state, const CellField& H, const Grid& grid,
                          const PhysicalParams& params, const SchemeConfig& cfg,
                          StepInfo* info) {
    cfg.validate();
    const int L = state.stack.layers();
    const double dt = cfg.dt;

    const SplitVelocities split = split_velocity(state.stack, grid);

    // Stage 1.
    const BaroclinicStepResult s1 = baroclinic_solve(state.stack, split.utilde, split.ubar,
                                                     state.zeta, grid, params, cfg);
    note_projection(info, s1);
    const SubstepResult r1 = barotropic_ssprk3_substep({split.ubar, state.zeta, H}, s1.gbar,
                                                       grid, params, dt, cfg.M);
    const std::vector<VectorField> u_hat1 = reconstruct(r1.ubar_final, s1.utilde_new);

    std::vector<VectorField> transport1 = state.stack.u;
    VectorField flux1(grid);
    if (cfg.reconcile) {
        const VectorField W_n = column_thickness_on_faces(state.stack.h, grid);
        const VectorField Fh1 = weighted_face_sum(state.stack.h, state.stack.u, grid);
        const VectorField uA1 = transport_adjustment(r1.accumulated_flux, Fh1, W_n, 1.0);
        transport1 = add_to_each(state.stack.u, uA1);
        flux1 = r1.accumulated_flux;
    }
    LayerStack hat1;
    hat1.h = state.stack.h;
    {
        const auto Th = thickness_tendency(state.stack.h, transport1, grid);
        for (int k = 0; k < L; ++k) axpy(dt, Th[k], hat1.h[k]);
    }
    check_thickness(hat1.h, "ssprk3_se stage 1 thickness");
    const CellField zeta_hat1 = ssh_from_thickness(hat1.h, H);
    hat1.u = u_hat1;

    // Stage 2.
    const BaroclinicStepResult s2 =
        baroclinic_solve(hat1, s1.utilde_new, r1.ubar_final, zeta_hat1, grid, params, cfg);
    note_projection(info, s2);
    std::vector<VectorField> utilde_half(L, VectorField(grid));
    for (int k = 0; k < L; ++k)
        utilde_half[k] = convex(split.utilde[k], 0.25, s2.utilde_new[k]);

    const SubstepResult r2 = barotropic_ssprk3_substep({r1.ubar_final, zeta_hat1, H}, s2.gbar,
                                                       grid, params, dt, cfg.M);
    const VectorField ubar_half = convex(split.ubar, 0.25, r2.ubar_final);
    const std::vector<VectorField> u_half = reconstruct(ubar_half, utilde_half);

    std::vector<VectorField> transport2 = hat1.u;
    VectorField flux2(grid);
    if (cfg.reconcile) {
        const VectorField W_hat1 = column_thickness_on_faces(hat1.h, grid);
        const VectorField Fh2 = weighted_face_sum(hat1.h, hat1.u, grid);
        const VectorField uA2 = transport_adjustment(r2.accumulated_flux, Fh2, W_hat1, 1.0);
        transport2 = add_to_each(hat1.u, uA2);
        flux2 = r2.accumulated_flux;
    }
    LayerStack hat_half;
    hat_half.h = state.stack.h;
    {
        const auto Th = thickness_tendency(hat1.h, transport2, grid);
        for (int k = 0; k < L; ++k) {
            CellField h2 = hat1.h[k];
            axpy(dt, Th[k], h2);
            hat_half.h[k] = convex(state.stack.h[k], 0.25, h2);
        }
    }
    check_thickness(hat_half.h, "ssprk3_se stage 2 thickness");
    const CellField zeta_half = ssh_from_thickness(hat_half.h, H);
    hat_half.u = u_half;

    // Stage 3.
    const BaroclinicStepResult s3 =
        baroclinic_solve(hat_half, utilde_half, ubar_half, zeta_half, grid, params, cfg);
    note_projection(info, s3);
    std::vector<VectorField> utilde_new(L, VectorField(grid));
    for (int k = 0; k < L; ++k)
        utilde_new[k] = convex(split.utilde[k], 2.0 / 3.0, s3.utilde_new[k]);

    // Corrector substepping from t_n with the interpolated forcing.
    const SubstepResult r3 =
        barotropic_ssprk3_substep({split.ubar, state.zeta, H},
                                  interp3(s1.gbar, s2.gbar, s3.gbar), grid, params, dt, cfg.M);

    ModelState out;
    out.time = state.time + dt;
    out.stack.u = reconstruct(r3.ubar_final, utilde_new);

    // Final thickness stage with transport 1/2 (u^n + u^{n+1}).
    std::vector<VectorField> transport3(L, VectorField(grid));
    for (int k = 0; k < L; ++k)
        transport3[k] = lincomb(0.5, state.stack.u[k], 0.5, out.stack.u[k]);
    if (cfg.reconcile) {
        const VectorField W_half = column_thickness_on_faces(hat_half.h, grid);
        VectorField Fh3 = lincomb(1.0 / 6.0, flux1, 1.0 / 6.0, flux2);
        axpy(2.0 / 3.0, weighted_face_sum(hat_half.h, transport3, grid), Fh3);
        const VectorField uA3 = transport_adjustment(r3.accumulated_flux, Fh3, W_half, 1.5);
        transport3 = add_to_each(transport3, uA3);
    }
    out.stack.h = state.stack.h;
    {
        const auto Th = thickness_tendency(hat_half.h, transport3, grid);
        for (int k = 0; k < L; ++k) {
            CellField h2 = hat_half.h[k];
            axpy(dt, Th[k], h2);
            out.stack.h[k] = convex(state.stack.h[k], 2.0 / 3.0, h2);
        }
    }
    check_thickness(out.stack.h, "ssprk3_se stage 3 thickness");
    out.zeta = ssh_from_thickness(out.stack.h, H);
    note_ssh(info, out.stack.h, H, r3.zeta_final);
    return out;
}

ModelState fe_se_baseline_step(const ModelState& state, const CellField& H, const Grid& grid,
                               const PhysicalParams& params, const SchemeConfig& cfg,
                               StepInfo* info) {
    cfg.validate();
    const int L = state.stack.layers();
    const double dt = cfg.dt;

    const SplitVelocities split = split_velocity(state.stack, grid);
    const BaroclinicStepResult s1 = baroclinic_solve(state.stack, split.utilde, split.ubar,
                                                     state.zeta, grid, params, cfg);
    note_projection(info, s1);
    const SubstepResult r1 = barotropic_ssprk2_substep({split.ubar, state.zeta, H}, s1.gbar,
                                                       grid, params, dt, cfg.M);

    ModelState out;
    out.time = state.time + dt;
    out.stack.u = reconstruct(r1.ubar_final, s1.utilde_new);

    std::vector<VectorField> transport = state.stack.u;
    if (cfg.reconcile) {
        const VectorField W_n = column_thickness_on_faces(state.stack.h, grid);
        const VectorField Fh1 = weighted_face_sum(state.stack.h, state.stack.u, grid);
        const VectorField uA1 = transport_adjustment(r1.accumulated_flux, Fh1, W_n, 1.0);
        transport = add_to_each(state.stack.u, uA1);
    }
    out.stack.h = state.stack.h;
    {
        const auto Th = thickness_tendency(state.stack.h, transport, grid);
        for (int k = 0; k < L; ++k) axpy(dt, Th[k], out.stack.h[k]);
    }
    check_thickness(out.stack.h, "fe_se thickness");
    out.zeta = ssh_from_thickness(out.stack.h, H);
    note_ssh(info, out.stack.h, H, r1.zeta_final);
    return out;
}

namespace {

struct UnsplitRhs {
    std::vector<VectorField> du;
    std::vector<CellField> dh;
};

UnsplitRhs unsplit_rhs(const LayerStack& stack, const Grid& grid,
                       const PhysicalParams& params) {
    UnsplitRhs r;
    r.du = momentum_tendency(stack, grid, params);
    const auto Du = vertical_diffusion(stack, grid, params);
    for (int k = 0; k < stack.layers(); ++k) {
        axpy(1.0, Du[k], r.du[k]);
        axpy(-params.f, perp(stack.u[k], grid), r.du[k]);
    }
    r.dh = thickness_tendency(stack.h, stack.u, grid);
    return r;
}

LayerStack euler_stage(const LayerStack& s, const UnsplitRhs& rhs, double dt) {
    LayerStack out = s;
    for (int k = 0; k < s.layers(); ++k) {
        axpy(dt, rhs.du[k], out.u[k]);
        axpy(dt, rhs.dh[k], out.h[k]);
    }
    return out;
}

LayerStack convex_stack(const LayerStack& x, double w, const LayerStack& y) {
    LayerStack out;
    out.h.reserve(x.layers());
    out.u.reserve(x.layers());
    for (int k = 0; k < x.layers(); ++k) {
        out.h.push_back(convex(x.h[k], w, y.h[k]));
        out.u.push_back(convex(x.u[k], w, y.u[k]));
    }
    return out;
}

} // namespace

ModelState unsplit_reference_step(const ModelState& state, const CellField& H, const Grid& grid,
                                  const PhysicalParams& params, const SchemeConfig& cfg,
                                  StepInfo* info) {
    cfg.validate();
    const double dt = cfg.dt;
    const LayerStack& s0 = state.stack;

    const LayerStack s1 = euler_stage(s0, unsplit_rhs(s0, grid, params), dt);
    check_thickness(s1.h, "unsplit stage 1");
    const LayerStack s2 =
        convex_stack(s0, 0.25, euler_stage(s1, unsplit_rhs(s1, grid, params), dt));
    check_thickness(s2.h, "unsplit stage 2");
    const LayerStack s3 =
        convex_stack(s0, 2.0 / 3.0, euler_stage(s2, unsplit_rhs(s2, grid, params), dt));
    check_thickness(s3.h, "unsplit stage 3");

    ModelState out;
    out.time = state.time + dt;
    out.stack = s3;
    out.zeta = ssh_from_thickness(s3.h, H);
    (void)info;
    return out;
}

ModelState advance(const ModelState& state, const CellField& H, const Grid& grid,
                   const PhysicalParams& params, const SchemeConfig& cfg, StepInfo* info) {
    switch (cfg.scheme) {
    case Scheme::Ssprk2Se: return ssprk2_se_step(state, H, grid, params, cfg, info);
    case Scheme::Ssprk3Se: return ssprk3_se_step(state, H, grid, params, cfg, info);
    case Scheme::FeSeBaseline: return fe_se_baseline_step(state, H, grid, params, cfg, info);
    case Scheme::UnsplitSsprk3Reference:
        return unsplit_reference_step(state, H, grid, params, cfg, info);
    }
    throw ConfigError("scheme", 0, "unknown scheme");
}

} // namespace barosplit
