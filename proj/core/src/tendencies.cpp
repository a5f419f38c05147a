#include "barosplit/tendencies.hpp"

#include <cmath>

namespace barosplit {

void PhysicalParams::validate(int layers) const {
    if (!(g > 0.0)) throw ConfigError("g", 0, "g must be positive");
    if (!(rho0 > 0.0)) throw ConfigError("rho0", 0, "rho0 must be positive");
    if (static_cast<int>(rho.size()) != layers)
        throw ConfigError("rho", 0, "rho list length " + std::to_string(rho.size()) +
                                        " does not match layer count " + std::to_string(layers));
    for (int k = 1; k < layers; ++k)
        if (!(rho[k] > rho[k - 1]))
            throw ConfigError("rho", 0, "rho must strictly increase downward");
    if (nu_h < 0.0) throw ConfigError("nu_h", 0, "nu_h must be >= 0");
    if (nu_v < 0.0) throw ConfigError("nu_v", 0, "nu_v must be >= 0");
    if (c_drag < 0.0) throw ConfigError("c_drag", 0, "c_drag must be >= 0");
}

void require_valid(const LayerStack& s, const Grid& g, const char* what) {
    if (s.h.size() != s.u.size() || s.h.empty())
        throw DimensionError(std::string(what) + ": layer stack has mismatched h/u lists");
    for (const auto& h : s.h) require_shape(h, g, what);
    for (const auto& u : s.u) require_shape(u, g, what);
}

std::vector<CellField> hydrostatic_pressure(const LayerStack& stack, const Grid& grid,
                                            const PhysicalParams& params) {
    require_valid(stack, grid, "hydrostatic_pressure");
    const int L = stack.layers();
    std::vector<CellField> p(L, CellField::zeros(grid));
    CellField above = params.has_surface_pressure() ? params.p_s : CellField::zeros(grid);
    if (params.has_surface_pressure()) require_shape(params.p_s, grid, "hydrostatic_pressure p_s");
    for (int k = 0; k < L; ++k) {
        const double rg = params.rho[k] * params.g;
        for (int j = 0; j < grid.ny; ++j)
            for (int i = 0; i < grid.nx; ++i)
                p[k](i, j) = above(i, j) + 0.5 * rg * stack.h[k](i, j);
        if (k + 1 < L)
            for (int j = 0; j < grid.ny; ++j)
                for (int i = 0; i < grid.nx; ++i)
                    above(i, j) += rg * stack.h[k](i, j);
    }
    return p;
}

std::vector<VectorField> momentum_tendency(const LayerStack& stack, const Grid& grid,
                                           const PhysicalParams& params) {
    require_valid(stack, grid, "momentum_tendency");
    for (const auto& u : stack.u)
        if (!all_finite(u))
            throw BlowUpError("momentum_tendency", -1, "non-finite velocity input");
    for (const auto& h : stack.h)
        if (!all_finite(h))
            throw BlowUpError("momentum_tendency", -1, "non-finite thickness input");

    const int L = stack.layers();
    const auto p = hydrostatic_pressure(stack, grid, params);
    std::vector<VectorField> out;
    out.reserve(L);
    const double inv_rho0 = 1.0 / params.rho0;
    for (int k = 0; k < L; ++k) {
        auto [vort, ke] = vorticity_and_ke(stack.u[k], grid);
        const VectorField grad_ke = gradient(ke, grid);
        const VectorField grad_p = gradient(p[k], grid);
        const VectorField up = perp(stack.u[k], grid);
        const VectorField wf = vorticity_to_faces(vort, grid);

        VectorField t(grid);
        auto& tu = t.udata();
        const auto& gku = grad_ke.udata();
        const auto& gpu = grad_p.udata();
        const auto& upu = up.udata();
        const auto& wfu = wf.udata();
        for (std::size_t n = 0; n < tu.size(); ++n)
            tu[n] = -gku[n] - wfu[n] * upu[n] - inv_rho0 * gpu[n];
        auto& tv = t.vdata();
        const auto& gkv = grad_ke.vdata();
        const auto& gpv = grad_p.vdata();
        const auto& upv = up.vdata();
        const auto& wfv = wf.vdata();
        for (std::size_t n = 0; n < tv.size(); ++n)
            tv[n] = -gkv[n] - wfv[n] * upv[n] - inv_rho0 * gpv[n];

        if (params.nu_h > 0.0) {
            if (params.visc_form == ViscForm::Laplacian)
                axpy(params.nu_h, laplacian(stack.u[k], grid), t);
            else
                axpy(-params.nu_h, biharmonic(stack.u[k], grid), t);
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<VectorField> vertical_diffusion(const LayerStack& stack, const Grid& grid,
                                            const PhysicalParams& params) {
    require_valid(stack, grid, "vertical_diffusion");
    const int L = stack.layers();
    for (const auto& h : stack.h)
        for (double x : h.data())
            if (!(x > 0.0)) throw InvalidThicknessError("vertical_diffusion: h_k <= 0");

    std::vector<VectorField> w(L, VectorField(grid));
    for (int k = 0; k < L; ++k) w[k] = face_average(stack.h[k], grid);

    std::vector<VectorField> out(L, VectorField(grid));
    // Interface stresses sigma_k between layers k-1 and k (k = 1..L-1),
    // sigma_0 = 0 at the surface, sigma_L = c_drag |u_L| u_L at the bottom.
    std::vector<VectorField> sigma(L + 1, VectorField(grid));
    if (params.nu_v > 0.0) {
        for (int k = 1; k < L; ++k) {
            auto& s = sigma[k];
            const auto& ua = stack.u[k - 1].udata();
            const auto& ub = stack.u[k].udata();
            const auto& wa = w[k - 1].udata();
            const auto& wb = w[k].udata();
            auto& su = s.udata();
            for (std::size_t n = 0; n < su.size(); ++n)
                su[n] = params.nu_v * (ua[n] - ub[n]) / (0.5 * (wa[n] + wb[n]));
            const auto& va = stack.u[k - 1].vdata();
            const auto& vb = stack.u[k].vdata();
            const auto& wva = w[k - 1].vdata();
            const auto& wvb = w[k].vdata();
            auto& sv = s.vdata();
            for (std::size_t n = 0; n < sv.size(); ++n)
                sv[n] = params.nu_v * (va[n] - vb[n]) / (0.5 * (wva[n] + wvb[n]));
        }
    }
    if (params.c_drag > 0.0) {
        const VectorField speed = face_speed(stack.u[L - 1], grid);
        auto& s = sigma[L];
        const auto& ub = stack.u[L - 1].udata();
        const auto& spu = speed.udata();
        auto& su = s.udata();
        for (std::size_t n = 0; n < su.size(); ++n)
            su[n] = params.c_drag * spu[n] * ub[n];
        const auto& vb = stack.u[L - 1].vdata();
        const auto& spv = speed.vdata();
        auto& sv = s.vdata();
        for (std::size_t n = 0; n < sv.size(); ++n)
            sv[n] = params.c_drag * spv[n] * vb[n];
    }
    for (int k = 0; k < L; ++k) {
        auto& t = out[k];
        auto& tu = t.udata();
        const auto& sa = sigma[k].udata();
        const auto& sb = sigma[k + 1].udata();
        const auto& wk = w[k].udata();
        for (std::size_t n = 0; n < tu.size(); ++n)
            tu[n] = (sa[n] - sb[n]) / wk[n];
        auto& tv = t.vdata();
        const auto& sva = sigma[k].vdata();
        const auto& svb = sigma[k + 1].vdata();
        const auto& wvk = w[k].vdata();
        for (std::size_t n = 0; n < tv.size(); ++n)
            tv[n] = (sva[n] - svb[n]) / wvk[n];
    }
    if (!grid.periodic_y()) {
        // Wall rows carry no momentum; keep them exactly zero.
        for (int k = 0; k < L; ++k)
            for (int i = 0; i < grid.nx; ++i) {
                out[k].v(i, 0) = 0.0;
                out[k].v(i, grid.ny) = 0.0;
            }
    }
    return out;
}

std::vector<CellField> thickness_tendency(const std::vector<CellField>& h,
                                          const std::vector<VectorField>& transport,
                                          const Grid& grid) {
    if (h.size() != transport.size())
        throw DimensionError("thickness_tendency: layer count mismatch");
    std::vector<CellField> out;
    out.reserve(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) {
        CellField d = divergence(flux_field(h[k], transport[k], grid), grid);
        for (double& x : d.data()) x = -x;
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace barosplit
