#pragma once

#include "barosplit/grid.hpp"

namespace barosplit {

/// ||test - ref||_2 / ||ref||_2 with fixed-order summation.
/// Throws MetricError when the reference norm is zero.
double relative_l2(const CellField& test, const CellField& ref);

/// Same metric over the concatenated u and v face arrays.
double relative_l2(const VectorField& test, const VectorField& ref);

/// Area-integrated value of a cell field (dx*dy*sum).
double area_integral(const CellField& f, const Grid& grid);

} // namespace barosplit
