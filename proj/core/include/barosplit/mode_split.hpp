#pragma once

#include <span>
#include <vector>

#include "barosplit/tendencies.hpp"

namespace barosplit {

/// Thickness-weighted face average of per-layer face fields:
/// sum_k favg(h_k) F_k / sum_k favg(h_k), evaluated as sum_k (w_k/W) F_k so a
/// single layer averages to itself exactly.
VectorField weighted_face_average(const std::vector<CellField>& h,
                                  const std::vector<VectorField>& F, const Grid& grid);

/// sum_k favg(h_k) F_k (no normalization); the layer-flux sums F^h.
VectorField weighted_face_sum(const std::vector<CellField>& h,
                              const std::vector<VectorField>& F, const Grid& grid);

/// sum_k favg(h_k), the column thickness on faces.
VectorField column_thickness_on_faces(const std::vector<CellField>& h, const Grid& grid);

/// ubar = sum h_k u_k / sum h_k per face, utilde_k = u_k - ubar.
SplitVelocities split_velocity(const LayerStack& stack, const Grid& grid);

/// Normalized weighted-free residual of a set of baroclinic velocities:
/// max_face |sum_k w_k F_k| / max(max_face sum_k w_k |F_k|, floor).
double weighted_free_residual(const std::vector<CellField>& h,
                              const std::vector<VectorField>& F, const Grid& grid);

/// One forward-Euler baroclinic solve: provisional update with the full
/// tendencies, then the thickness-weighted projection that both recovers the
/// barotropic forcing gbar and removes it from the update.
BaroclinicStepResult baroclinic_feuler(const LayerStack& stack,
                                       const std::vector<VectorField>& utilde,
                                       const CellField& zeta, const Grid& grid,
                                       const PhysicalParams& params, double dt);

/// Variant with implicit vertical mixing: the explicit vertical diffusion is
/// dropped from the provisional update; after the projection the backward-
/// Euler system u' - dt D(u') = utilde' + ubar is solved column by column
/// (tridiagonal in the layer index, bottom drag linearized at the old bottom
/// speed) and the baroclinic part is utilde' = u' - ubar.
BaroclinicStepResult baroclinic_feuler_mixing(const LayerStack& stack,
                                              const std::vector<VectorField>& utilde,
                                              const VectorField& ubar, const CellField& zeta,
                                              const Grid& grid, const PhysicalParams& params,
                                              double dt);

/// Thomas algorithm. lower[0] and upper[L-1] are ignored. Throws SolverError
/// on a zero pivot.
std::vector<double> tridiag_solve(std::span<const double> lower, std::span<const double> diag,
                                  std::span<const double> upper, std::span<const double> rhs);

} // namespace barosplit
