#pragma once

#include <utility>

#include "barosplit/grid.hpp"

namespace barosplit {

/// Two-point difference of a cell scalar across each face.
/// Channel walls carry zero normal gradient.
VectorField gradient(const CellField& s, const Grid& grid);

/// Net face flux out of each cell divided by the cell widths.
/// Wall faces contribute exactly zero flux.
CellField divergence(const VectorField& F, const Grid& grid);

/// k x F on the staggering: the tangential component at each face is the
/// 4-point average of the neighboring opposite-component faces. At channel
/// walls the average uses the available interior faces only.
VectorField perp(const VectorField& F, const Grid& grid);

/// Relative vorticity dv/dx - du/dy at cell corners and kinetic energy
/// 0.5*(avg u^2 + avg v^2) at cell centers. Free-slip walls have zero
/// corner vorticity.
std::pair<CornerField, CellField> vorticity_and_ke(const VectorField& F, const Grid& grid);

/// Component-wise 5-point Laplacian. Free-slip walls: zero tangential
/// derivative across the wall for u, homogeneous wall values for v.
VectorField laplacian(const VectorField& F, const Grid& grid);

/// laplacian(laplacian(F)).
VectorField biharmonic(const VectorField& F, const Grid& grid);

/// Cell scalar averaged to faces (two-point centered; one-sided copy at
/// channel walls so the value stays positive for thickness weights).
VectorField face_average(const CellField& s, const Grid& grid);

/// Corner vorticity averaged to the two corners adjacent to each face.
VectorField vorticity_to_faces(const CornerField& w, const Grid& grid);

/// |u| at each face: the stored normal component combined with the 4-point
/// tangential average (wall rows are zero).
VectorField face_speed(const VectorField& F, const Grid& grid);

/// Elementwise product per component.
VectorField multiply(const VectorField& a, const VectorField& b);

/// face_average(s) * u, the flux form used by every transport term.
VectorField flux_field(const CellField& s, const VectorField& u, const Grid& grid);

} // namespace barosplit
