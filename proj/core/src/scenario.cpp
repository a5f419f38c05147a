#include "barosplit/scenario.hpp"

#include <cmath>
#include <numbers>

#include "barosplit/mode_split.hpp"
#include "barosplit/stepper.hpp"
#include "barosplit/tendencies.hpp"

namespace barosplit {

namespace {

constexpr double pi = std::numbers::pi;

constexpr double kDepth = 100.0;    // resting column depth (m)
constexpr double kTiltAmp = 0.5;    // interface tilt amplitude (m)
constexpr double kCoriolis = 1.2e-4;

PhysicalParams channel_params(int L) {
    PhysicalParams p;
    p.f = kCoriolis;
    p.g = 9.81;
    p.rho0 = 1000.0;
    // Strong stratification keeps the layered wave operator well conditioned
    // at desk scale: the mid-layer pressure couples the interfaces through a
    // triangular matrix whose eigenvalue separation is set by the density
    // ratios, and near-equal densities leave it close to defective (secular
    // interface growth over long runs).
    for (int k = 0; k < L; ++k)
        p.rho.push_back(1000.0 * (1.0 + 0.25 * k));
    // The mid-layer pressure gives every layer a fast gravity mode at about
    // sqrt(g h0 / 2); the ones left in the baroclinic subsystem are advanced
    // with the slow step and their coupling amplifies at a rate ~ omega^2 dt.
    // Growth and Laplacian damping both scale as k^2, so nu_h >= c_int^2 dt
    // keeps every scale neutral; 8000 m^2/s covers the step sizes the studies
    // use and is ordinary eddy viscosity for a 10 km grid.
    p.nu_h = 8000.0;
    p.visc_form = ViscForm::Laplacian;
    p.nu_v = 1e-4;
    p.c_drag = 1e-3;
    return p;
}

/// Tilt weights for interfaces i = 1..L-1, chosen orthogonal to the
/// depth-mean pressure response so the tilt drives shear rather than a
/// barotropic jet. The response coefficients follow from summing the
/// mid-layer pressure gradients over the column.
std::vector<double> interface_weights(int L, const std::vector<double>& rho) {
    std::vector<double> w(L + 1, 0.0); // w[0] (surface) and w[L] (bottom) stay 0
    if (L == 2) {
        w[1] = 1.0; // a single interface cannot be made force-free
        return w;
    }
    std::vector<double> c(L - 1, 0.0);
    for (int i = 1; i < L; ++i)
        c[i - 1] = rho[i] * (L - i - 0.5) - rho[i - 1] * (L - i + 0.5);
    double wc = 0.0, cc = 0.0;
    for (int i = 1; i < L; ++i) {
        w[i] = std::sin(2.0 * pi * i / L);
        wc += w[i] * c[i - 1];
        cc += c[i - 1] * c[i - 1];
    }
    for (int i = 1; i < L; ++i) w[i] -= (wc / cc) * c[i - 1];
    double wmax = 0.0;
    for (int i = 1; i < L; ++i) wmax = std::max(wmax, std::abs(w[i]));
    for (int i = 1; i < L; ++i) w[i] /= wmax;
    return w;
}

/// Exactly balanced zonal state: prescribe the jet, evaluate the discrete
/// inviscid y-momentum terms, integrate the implied pressure in y and invert
/// the hydrostatic relation for the layer thicknesses.
void build_balanced_zonal(Scenario& sc) {
    const Grid& g = sc.grid;
    const int L = sc.layers;
    const PhysicalParams& p = sc.params;
    const double Ly = g.ny * g.dy;
    const double U = 0.5;
    const std::vector<double> w = interface_weights(L, p.rho);

    for (int k = 0; k < L; ++k) {
        const double mk = -0.5 * (w[k] + w[k + 1]);
        VectorField u(g);
        for (int j = 0; j < g.ny; ++j) {
            const double prof = std::sin(pi * (j + 0.5) / g.ny);
            for (int i = 0; i < g.nx; ++i) u.u(i, j) = U * mk * prof;
        }
        sc.initial.stack.u.push_back(std::move(u));
    }

    // Required dp/dy per layer so the inviscid y-momentum vanishes at every
    // interior v-face, evaluated with the same operators the model uses.
    const double h0 = kDepth / L;
    std::vector<CellField> pk(L, CellField::zeros(g));
    double rest = 0.0;
    for (int k = 0; k < L; ++k) {
        const double p_rest = rest + 0.5 * p.rho[k] * p.g * h0;
        rest += p.rho[k] * p.g * h0;
        const auto& uk = sc.initial.stack.u[k];
        auto [vort, ke] = vorticity_and_ke(uk, g);
        const VectorField grad_ke = gradient(ke, g);
        const VectorField wf = vorticity_to_faces(vort, g);
        const VectorField up = perp(uk, g);
        for (int i = 0; i < g.nx; ++i) pk[k](i, 0) = p_rest;
        for (int j = 1; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const double dpdy =
                    -p.rho0 * (grad_ke.v(i, j) + (wf.v(i, j) + p.f) * up.v(i, j));
                pk[k](i, j) = pk[k](i, j - 1) + g.dy * dpdy;
            }
    }
    // Invert p_k = sum_{l<k} rho_l g h_l + rho_k g h_k / 2 cell by cell.
    sc.initial.stack.h.assign(L, CellField::zeros(g));
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double acc = 0.0;
            for (int k = 0; k < L; ++k) {
                const double hk = 2.0 * (pk[k](i, j) - acc) / (p.rho[k] * p.g);
                sc.initial.stack.h[k](i, j) = hk;
                acc += p.rho[k] * p.g * hk;
            }
        }
}

void build_perturbed(Scenario& sc, double amp) {
    const Grid& g = sc.grid;
    const int L = sc.layers;
    const PhysicalParams& p = sc.params;
    const double Lx = g.nx * g.dx;
    const double lambda = 0.75 * Lx;
    const std::vector<double> w = interface_weights(L, p.rho);

    // Zonal-mean part: the exactly balanced jet/tilt state.
    build_balanced_zonal(sc);

    // Interface displacement of the perturbation only, i = 0..L (0 = surface,
    // L = bottom). The zonal cosine rides under a periodic window so the
    // field stays smooth across the seam while its dominant wavelength is
    // 3 Lx / 4.
    auto eta = [&](int i, double x, double yhat) {
        if (i == L) return 0.0;
        const double window = std::sin(pi * x / Lx) * std::sin(pi * x / Lx);
        const double zonal = std::cos(2.0 * pi * x / lambda) * window;
        if (i == 0) return 0.1 * amp * zonal * std::sin(pi * yhat);
        return w[i] * amp * zonal * std::sin(pi * yhat);
    };

    const auto p_mean = hydrostatic_pressure(sc.initial.stack, g, p);
    for (int j = 0; j < g.ny; ++j) {
        const double yhat = (j + 0.5) / g.ny;
        for (int i = 0; i < g.nx; ++i) {
            const double x = (i + 0.5) * g.dx;
            for (int k = 0; k < L; ++k)
                sc.initial.stack.h[k](i, j) += eta(k, x, yhat) - eta(k + 1, x, yhat);
        }
    }
    // Geostrophic velocity for the perturbation pressure, added on top of the
    // balanced jet: u += (1/(rho0 f)) k x grad(p - p_mean).
    const auto p_tot = hydrostatic_pressure(sc.initial.stack, g, p);
    for (int k = 0; k < L; ++k) {
        VectorField du = perp(gradient(lincomb(1.0, p_tot[k], -1.0, p_mean[k]), g), g);
        axpy(1.0 / (p.rho0 * p.f), du, sc.initial.stack.u[k]);
    }
}

} // namespace

Scenario build_channel_scenario(int scale, int L, double perturbation_amp) {
    if (scale < 1) throw ConfigError("scale", 0, "scale must be >= 1");
    if (L < 2) throw ConfigError("layers", 0, "channel scenario needs L >= 2");
    if (perturbation_amp < 0.0)
        throw ConfigError("amplitude", 0, "perturbation amplitude must be >= 0");

    Scenario sc;
    sc.name = "channel";
    sc.grid = Grid(44 * scale, 16 * scale, 1e4 / scale, 1e4 / scale, Boundary::ZonalChannel);
    sc.layers = L;
    sc.params = channel_params(L);
    sc.H = CellField::constant(sc.grid, kDepth);
    sc.t_end = 4096.0;
    sc.initial.time = 0.0;

    if (perturbation_amp == 0.0)
        build_balanced_zonal(sc);
    else
        build_perturbed(sc, perturbation_amp);

    sc.initial.zeta = ssh_from_thickness(sc.initial.stack.h, sc.H);

    // Construction-time sanity: positive thicknesses, tilts well below the
    // layer depth.
    double hmin = kDepth;
    for (const auto& hk : sc.initial.stack.h)
        for (double x : hk.data()) hmin = std::min(hmin, x);
    if (!(hmin > 0.0))
        throw ConfigError("amplitude", 0, "initial thickness is not positive");
    const double tilt = kTiltAmp + perturbation_amp;
    if (!(tilt < hmin))
        throw ConfigError("amplitude", 0, "interface tilt exceeds the layer thickness");
    return sc;
}

Scenario build_channel_scenario(int scale, int L) {
    return build_channel_scenario(scale, L, kChannelDefaultAmp);
}

} // namespace barosplit
