#include "barosplit/mode_split.hpp"

#include <cmath>

namespace barosplit {

namespace {

std::vector<VectorField> face_weights(const std::vector<CellField>& h, const Grid& grid) {
    std::vector<VectorField> w;
    w.reserve(h.size());
    for (const auto& hk : h) w.push_back(face_average(hk, grid));
    return w;
}

} // namespace

VectorField column_thickness_on_faces(const std::vector<CellField>& h, const Grid& grid) {
    VectorField W(grid);
    for (const auto& hk : h) axpy(1.0, face_average(hk, grid), W);
    return W;
}

VectorField weighted_face_sum(const std::vector<CellField>& h,
                              const std::vector<VectorField>& F, const Grid& grid) {
    if (h.size() != F.size()) throw DimensionError("weighted_face_sum: layer count mismatch");
    VectorField acc(grid);
    for (std::size_t k = 0; k < h.size(); ++k)
        axpy(1.0, multiply(face_average(h[k], grid), F[k]), acc);
    return acc;
}

VectorField weighted_face_average(const std::vector<CellField>& h,
                                  const std::vector<VectorField>& F, const Grid& grid) {
    if (h.size() != F.size())
        throw DimensionError("weighted_face_average: layer count mismatch");
    const auto w = face_weights(h, grid);
    VectorField W(grid);
    for (const auto& wk : w) axpy(1.0, wk, W);
    for (double x : W.udata())
        if (!(x > 0.0)) throw InvalidThicknessError("zero column thickness on a face");
    for (double x : W.vdata())
        if (!(x > 0.0)) throw InvalidThicknessError("zero column thickness on a face");

    VectorField avg(grid);
    for (std::size_t k = 0; k < h.size(); ++k) {
        const auto& wu = w[k].udata();
        const auto& Wu = W.udata();
        const auto& fu = F[k].udata();
        auto& au = avg.udata();
        for (std::size_t n = 0; n < au.size(); ++n) au[n] += (wu[n] / Wu[n]) * fu[n];
        const auto& wv = w[k].vdata();
        const auto& Wv = W.vdata();
        const auto& fv = F[k].vdata();
        auto& av = avg.vdata();
        for (std::size_t n = 0; n < av.size(); ++n) av[n] += (wv[n] / Wv[n]) * fv[n];
    }
    return avg;
}

SplitVelocities split_velocity(const LayerStack& stack, const Grid& grid) {
    require_valid(stack, grid, "split_velocity");
    SplitVelocities s;
    s.ubar = weighted_face_average(stack.h, stack.u, grid);
    s.utilde.reserve(stack.layers());
    for (int k = 0; k < stack.layers(); ++k)
        s.utilde.push_back(lincomb(1.0, stack.u[k], -1.0, s.ubar));
    return s;
}

double weighted_free_residual(const std::vector<CellField>& h,
                              const std::vector<VectorField>& F, const Grid& grid) {
    const auto w = face_weights(h, grid);
    double max_num = 0.0;
    double max_den = 0.0;
    const std::size_t nu = F[0].udata().size();
    for (std::size_t n = 0; n < nu; ++n) {
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < F.size(); ++k) {
            const double wf = w[k].udata()[n] * F[k].udata()[n];
            num += wf;
            den += std::abs(wf);
        }
        max_num = std::max(max_num, std::abs(num));
        max_den = std::max(max_den, den);
    }
    const std::size_t nv = F[0].vdata().size();
    for (std::size_t n = 0; n < nv; ++n) {
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < F.size(); ++k) {
            const double wf = w[k].vdata()[n] * F[k].vdata()[n];
            num += wf;
            den += std::abs(wf);
        }
        max_num = std::max(max_num, std::abs(num));
        max_den = std::max(max_den, den);
    }
    return max_num / std::max(max_den, 1e-300);
}

namespace {

/// Shared by both Algorithm variants: provisional update, projection, gbar.
BaroclinicStepResult provisional_and_project(const LayerStack& stack,
                                             const std::vector<VectorField>& utilde,
                                             const CellField& zeta, const Grid& grid,
                                             const PhysicalParams& params, double dt,
                                             bool explicit_mixing) {
    require_valid(stack, grid, "baroclinic_feuler");
    require_shape(zeta, grid, "baroclinic_feuler");
    const int L = stack.layers();
    if (static_cast<int>(utilde.size()) != L)
        throw DimensionError("baroclinic_feuler: utilde layer count mismatch");
    if (!(dt > 0.0)) throw ConfigError("dt", 0, "dt must be positive");

    const auto Tu = momentum_tendency(stack, grid, params);
    std::vector<VectorField> Du;
    if (explicit_mixing) Du = vertical_diffusion(stack, grid, params);
    const VectorField gz = gradient(zeta, grid);

    BaroclinicStepResult r;
    r.utilde_new.reserve(L);
    for (int k = 0; k < L; ++k) {
        VectorField prov = utilde[k];
        axpy(-dt * params.f, perp(utilde[k], grid), prov);
        axpy(dt, Tu[k], prov);
        if (explicit_mixing) axpy(dt, Du[k], prov);
        axpy(dt * params.g, gz, prov);
        if (!all_finite(prov))
            throw BlowUpError("baroclinic_feuler", -1,
                              "non-finite baroclinic update at layer " + std::to_string(k));
        r.utilde_new.push_back(std::move(prov));
    }
    const VectorField avg = weighted_face_average(stack.h, r.utilde_new, grid);
    for (int k = 0; k < L; ++k) axpy(-1.0, avg, r.utilde_new[k]);
    VectorField gbar = avg;
    for (double& x : gbar.udata()) x /= dt;
    for (double& x : gbar.vdata()) x /= dt;
    r.gbar = std::move(gbar);
    r.projection_residual = weighted_free_residual(stack.h, r.utilde_new, grid);
    return r;
}

} // namespace

BaroclinicStepResult baroclinic_feuler(const LayerStack& stack,
                                       const std::vector<VectorField>& utilde,
                                       const CellField& zeta, const Grid& grid,
                                       const PhysicalParams& params, double dt) {
    return provisional_and_project(stack, utilde, zeta, grid, params, dt, true);
}

std::vector<double> tridiag_solve(std::span<const double> lower, std::span<const double> diag,
                                  std::span<const double> upper, std::span<const double> rhs) {
    const std::size_t n = diag.size();
    if (n == 0 || lower.size() != n || upper.size() != n || rhs.size() != n)
        throw DimensionError("tridiag_solve: inconsistent lengths");
    std::vector<double> c(n, 0.0), x(n, 0.0);
    if (diag[0] == 0.0) throw SolverError("tridiag_solve: zero pivot at row 0");
    c[0] = upper[0] / diag[0];
    x[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double piv = diag[i] - lower[i] * c[i - 1];
        if (piv == 0.0)
            throw SolverError("tridiag_solve: zero pivot at row " + std::to_string(i));
        c[i] = upper[i] / piv;
        x[i] = (rhs[i] - lower[i] * x[i - 1]) / piv;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
}

BaroclinicStepResult baroclinic_feuler_mixing(const LayerStack& stack,
                                              const std::vector<VectorField>& utilde,
                                              const VectorField& ubar, const CellField& zeta,
                                              const Grid& grid, const PhysicalParams& params,
                                              double dt) {
    BaroclinicStepResult r =
        provisional_and_project(stack, utilde, zeta, grid, params, dt, false);
    if (params.nu_v == 0.0 && params.c_drag == 0.0) return r; // solve is the identity

    const int L = stack.layers();
    const auto w = face_weights(stack.h, grid);
    const VectorField bottom_speed = face_speed(stack.u[L - 1], grid);

    std::vector<double> lo(L), di(L), up(L), rhs(L);
    auto solve_columns = [&](auto get_w, auto get_rhs_base, auto get_ubar, auto get_speed,
                             auto put, std::size_t count) {
        for (std::size_t n = 0; n < count; ++n) {
            for (int k = 0; k < L; ++k) {
                lo[k] = up[k] = 0.0;
                di[k] = 1.0;
                if (params.nu_v > 0.0) {
                    if (k > 0) {
                        const double hbar = 0.5 * (get_w(k - 1, n) + get_w(k, n));
                        const double c = dt * params.nu_v / (get_w(k, n) * hbar);
                        lo[k] = -c;
                        di[k] += c;
                    }
                    if (k + 1 < L) {
                        const double hbar = 0.5 * (get_w(k, n) + get_w(k + 1, n));
                        const double c = dt * params.nu_v / (get_w(k, n) * hbar);
                        up[k] = -c;
                        di[k] += c;
                    }
                }
                if (k == L - 1 && params.c_drag > 0.0)
                    di[k] += dt * params.c_drag * get_speed(n) / get_w(k, n);
                rhs[k] = get_rhs_base(k, n) + get_ubar(n);
            }
            const auto full = tridiag_solve(lo, di, up, rhs);
            for (int k = 0; k < L; ++k) put(k, n, full[k] - get_ubar(n));
        }
    };

    solve_columns([&](int k, std::size_t n) { return w[k].udata()[n]; },
                  [&](int k, std::size_t n) { return r.utilde_new[k].udata()[n]; },
                  [&](std::size_t n) { return ubar.udata()[n]; },
                  [&](std::size_t n) { return bottom_speed.udata()[n]; },
                  [&](int k, std::size_t n, double val) { r.utilde_new[k].udata()[n] = val; },
                  ubar.udata().size());
    if (grid.periodic_y()) {
        solve_columns([&](int k, std::size_t n) { return w[k].vdata()[n]; },
                      [&](int k, std::size_t n) { return r.utilde_new[k].vdata()[n]; },
                      [&](std::size_t n) { return ubar.vdata()[n]; },
                      [&](std::size_t n) { return bottom_speed.vdata()[n]; },
                      [&](int k, std::size_t n, double val) { r.utilde_new[k].vdata()[n] = val; },
                      ubar.vdata().size());
    } else {
        // Interior v rows only; walls stay zero.
        const std::size_t nx = static_cast<std::size_t>(grid.nx);
        solve_columns(
            [&](int k, std::size_t n) { return w[k].vdata()[n + nx]; },
            [&](int k, std::size_t n) { return r.utilde_new[k].vdata()[n + nx]; },
            [&](std::size_t n) { return ubar.vdata()[n + nx]; },
            [&](std::size_t n) { return bottom_speed.vdata()[n + nx]; },
            [&](int k, std::size_t n, double val) { r.utilde_new[k].vdata()[n + nx] = val; },
            ubar.vdata().size() - 2 * nx);
    }
    for (int k = 0; k < L; ++k)
        if (!all_finite(r.utilde_new[k]))
            throw BlowUpError("baroclinic_feuler_mixing", -1, "non-finite vertical mixing solve");
    return r;
}

} // namespace barosplit
