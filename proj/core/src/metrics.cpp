#include "barosplit/metrics.hpp"

#include <cmath>

namespace barosplit {

namespace {

void accumulate(const std::vector<double>& test, const std::vector<double>& ref,
                double& diff2, double& ref2) {
    if (test.size() != ref.size()) throw DimensionError("relative_l2: shapes differ");
    for (std::size_t n = 0; n < test.size(); ++n) {
        const double d = test[n] - ref[n];
        diff2 += d * d;
        ref2 += ref[n] * ref[n];
    }
}

} // namespace

double relative_l2(const CellField& test, const CellField& ref) {
    double diff2 = 0.0, ref2 = 0.0;
    accumulate(test.data(), ref.data(), diff2, ref2);
    if (ref2 == 0.0) throw MetricError("relative_l2: zero reference norm");
    return std::sqrt(diff2) / std::sqrt(ref2);
}

double relative_l2(const VectorField& test, const VectorField& ref) {
    double diff2 = 0.0, ref2 = 0.0;
    accumulate(test.udata(), ref.udata(), diff2, ref2);
    accumulate(test.vdata(), ref.vdata(), diff2, ref2);
    if (ref2 == 0.0) throw MetricError("relative_l2: zero reference norm");
    return std::sqrt(diff2) / std::sqrt(ref2);
}

double area_integral(const CellField& f, const Grid& grid) {
    require_shape(f, grid, "area_integral");
    return sum(f.data()) * grid.dx * grid.dy;
}

} // namespace barosplit
