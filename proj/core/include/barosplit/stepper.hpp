#pragma once

#include <optional>
#include <string>

#include "barosplit/barotropic.hpp"
#include "barosplit/mode_split.hpp"

namespace barosplit {

enum class Scheme { Ssprk2Se, Ssprk3Se, FeSeBaseline, UnsplitSsprk3Reference };

std::string to_string(Scheme s);
std::optional<Scheme> parse_scheme(const std::string& name);

struct SchemeConfig {
    Scheme scheme = Scheme::Ssprk2Se;
    double dt = 0.0;      ///< slow step (s)
    int M = 1;            ///< barotropic substeps per slow step
    bool mixing = false;    ///< implicit vertical mixing in the baroclinic solves
    bool reconcile = true;  ///< flux-form SSH reconciliation

    double dt_btr() const { return dt / M; }
    void validate() const;
};

/// Per-step diagnostics collected while advancing.
struct StepInfo {
    /// Max over the step's baroclinic solves of the normalized weighted-free
    /// residual after the projection.
    double projection_residual = 0.0;
    /// max|sum_k h_k - H - zeta_corrector| at step end (schemes with a
    /// corrector substepping only).
    double ssh_residual = 0.0;
    bool has_ssh_residual = false;
};

ModelState ssprk2_se_step(const ModelState& state, const CellField& H, const Grid& grid,
                          const PhysicalParams& params, const SchemeConfig& cfg,
                          StepInfo* info = nullptr);

ModelState ssprk3_se_step(const ModelState& state, const CellField& H, const Grid& grid,
                          const PhysicalParams& params, const SchemeConfig& cfg,
                          StepInfo* info = nullptr);

ModelState fe_se_baseline_step(const ModelState& state, const CellField& H, const Grid& grid,
                               const PhysicalParams& params, const SchemeConfig& cfg,
                               StepInfo* info = nullptr);

ModelState unsplit_reference_step(const ModelState& state, const CellField& H, const Grid& grid,
                                  const PhysicalParams& params, const SchemeConfig& cfg,
                                  StepInfo* info = nullptr);

/// Dispatch on cfg.scheme.
ModelState advance(const ModelState& state, const CellField& H, const Grid& grid,
                   const PhysicalParams& params, const SchemeConfig& cfg,
                   StepInfo* info = nullptr);

/// sum_k h_k - H.
CellField ssh_from_thickness(const std::vector<CellField>& h, const CellField& H);

} // namespace barosplit
