#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "barosplit/metrics.hpp"
#include "barosplit/scenario.hpp"
#include "barosplit/stepper.hpp"

namespace barosplit {

/// Observer invoked after every completed step of run_steps.
using StepObserver = std::function<void(int step, const ModelState&, const StepInfo&)>;

/// Advance `state` by `nsteps` steps of cfg. Throws BlowUpError on divergence.
ModelState run_steps(ModelState state, const Scenario& sc, const SchemeConfig& cfg, int nsteps,
                     const StepObserver& observer = nullptr);

struct ConvergenceRow {
    double dt = 0.0;
    double dt_btr = 0.0;
    int M = 1;
    std::optional<double> err_u;
    std::optional<double> rate_u;
    std::optional<double> err_h;
    std::optional<double> rate_h;
    bool ok = false; ///< false rows print as N/A (the run blew up)
};

struct ReferenceConfig {
    Scheme scheme = Scheme::UnsplitSsprk3Reference;
    double dt = 0.25;
    int M = 1;
    bool mixing = false;
    bool reconcile = true;
};

/// Run the scheme at each dt (strictly halving, each dividing t_end), measure
/// the top-layer relative l2 errors against a reference generated once, and
/// attach rates between adjacent ok rows. Diverged runs become N/A rows.
std::vector<ConvergenceRow> run_convergence_study(const Scenario& sc, Scheme scheme,
                                                  const std::vector<double>& dts, int M,
                                                  const ReferenceConfig& ref,
                                                  bool mixing = false, bool reconcile = true);

/// Top-layer fields of the reference trajectory at t_end; exposed so several
/// studies can share one reference run.
struct ReferenceSolution {
    VectorField u_top;
    CellField h_top;
};
ReferenceSolution compute_reference(const Scenario& sc, const ReferenceConfig& ref);

struct TaylorRow {
    double dt = 0.0;
    double residual = 0.0;
    std::optional<double> exponent; ///< log2(residual(2dt)/residual(dt))
};

/// Coefficient-level check of the substepping expansion for a spatially
/// uniform linearized fast state (ubar plus a fixed SSH gradient): runs the
/// two-stage substep recursion on a 2-vector and subtracts the three-term
/// series; reports the residual scaling between dt halvings. Independent of
/// the grid kernels by construction.
struct TaylorCheckInput {
    double f = 1.0;
    double g = 9.81;
    std::array<double, 2> ubar0{1.0, 0.4};
    std::array<double, 2> grad_zeta{0.0, 0.0};
    std::array<double, 2> gbar{0.0, 0.0};
};
std::vector<TaylorRow> run_taylor_check(const TaylorCheckInput& in,
                                        const std::vector<double>& dts, int M);

/// The three-term series itself (exposed for tests).
std::array<double, 2> taylor_expansion(const TaylorCheckInput& in, double dt, int M);
/// The coefficient-level substep recursion (exposed for tests).
std::array<double, 2> taylor_recursion(const TaylorCheckInput& in, double dt, int M);

struct StabilityRow {
    double dt_btr = 0.0;
    bool bounded = false; ///< max|u| stayed below 100x its initial value
};

struct StabilityReport {
    std::vector<StabilityRow> rows;
    std::optional<double> largest_stable_dt_btr;
};

/// For each dt_btr, run nsteps slow steps of dt = M*dt_btr and record whether
/// max|u| stays below 100x its initial value. Divergence is data, not an
/// error.
StabilityReport run_stability_probe(const Scenario& sc, Scheme scheme,
                                    const std::vector<double>& dt_btr_sweep, int M,
                                    int nsteps = 1000, bool mixing = false,
                                    bool reconcile = true);

} // namespace barosplit
