#include "barosplit/grid.hpp"

#include <cmath>

namespace barosplit {

std::string to_string(Boundary b) {
    return b == Boundary::DoublyPeriodic ? "doubly-periodic" : "zonal-channel";
}

Grid::Grid(int nx_, int ny_, double dx_, double dy_, Boundary b)
    : nx(nx_), ny(ny_), dx(dx_), dy(dy_), boundary(b) {
    if (nx < 4 || ny < 4)
        throw DimensionError("grid must have nx >= 4 and ny >= 4, got " +
                             std::to_string(nx) + "x" + std::to_string(ny));
    if (!(dx > 0.0) || !(dy > 0.0))
        throw DimensionError("grid spacings must be positive");
}

VectorField VectorField::constant(const Grid& g, double a, double b) {
    VectorField f(g);
    for (double& x : f.u_) x = a;
    if (g.periodic_y()) {
        for (double& x : f.v_) x = b;
    } else {
        for (int j = 1; j < g.vrows() - 1; ++j)
            for (int i = 0; i < g.nx; ++i) f.v(i, j) = b;
    }
    return f;
}

bool all_finite(const CellField& f) {
    for (double x : f.data())
        if (!std::isfinite(x)) return false;
    return true;
}

bool all_finite(const VectorField& f) {
    for (double x : f.udata())
        if (!std::isfinite(x)) return false;
    for (double x : f.vdata())
        if (!std::isfinite(x)) return false;
    return true;
}

void require_shape(const CellField& f, const Grid& g, const char* what) {
    if (!f.shape_matches(g))
        throw DimensionError(std::string(what) + ": cell field shape " +
                             std::to_string(f.nx()) + "x" + std::to_string(f.ny()) +
                             " does not match grid " + std::to_string(g.nx) + "x" +
                             std::to_string(g.ny));
}

void require_shape(const VectorField& f, const Grid& g, const char* what) {
    if (!f.shape_matches(g))
        throw DimensionError(std::string(what) + ": vector field shape does not match grid (" +
                             std::to_string(f.nx()) + "x" + std::to_string(f.ny()) + ", vrows " +
                             std::to_string(f.vrows()) + " vs expected " +
                             std::to_string(g.vrows()) + ")");
}

double sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

double max_abs(const CellField& f) {
    double m = 0.0;
    for (double x : f.data()) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const VectorField& f) {
    double m = 0.0;
    for (double x : f.udata()) m = std::max(m, std::abs(x));
    for (double x : f.vdata()) m = std::max(m, std::abs(x));
    return m;
}

void axpy(double a, const CellField& x, CellField& y) {
    const auto& xs = x.data();
    auto& ys = y.data();
    for (std::size_t n = 0; n < ys.size(); ++n) ys[n] += a * xs[n];
}

void axpy(double a, const VectorField& x, VectorField& y) {
    const auto& xu = x.udata();
    auto& yu = y.udata();
    for (std::size_t n = 0; n < yu.size(); ++n) yu[n] += a * xu[n];
    const auto& xv = x.vdata();
    auto& yv = y.vdata();
    for (std::size_t n = 0; n < yv.size(); ++n) yv[n] += a * xv[n];
}

CellField lincomb(double a, const CellField& x, double b, const CellField& y) {
    CellField r(x.nx(), x.ny());
    const auto& xs = x.data();
    const auto& ys = y.data();
    auto& rs = r.data();
    for (std::size_t n = 0; n < rs.size(); ++n) rs[n] = a * xs[n] + b * ys[n];
    return r;
}

VectorField lincomb(double a, const VectorField& x, double b, const VectorField& y) {
    VectorField r = x;
    auto& ru = r.udata();
    const auto& yu = y.udata();
    for (std::size_t n = 0; n < ru.size(); ++n) ru[n] = a * ru[n] + b * yu[n];
    auto& rv = r.vdata();
    const auto& yv = y.vdata();
    for (std::size_t n = 0; n < rv.size(); ++n) rv[n] = a * rv[n] + b * yv[n];
    return r;
}

CellField convex(const CellField& x, double w, const CellField& y) {
    CellField r = x;
    auto& rs = r.data();
    const auto& ys = y.data();
    for (std::size_t n = 0; n < rs.size(); ++n) rs[n] += w * (ys[n] - rs[n]);
    return r;
}

VectorField convex(const VectorField& x, double w, const VectorField& y) {
    VectorField r = x;
    auto& ru = r.udata();
    const auto& yu = y.udata();
    for (std::size_t n = 0; n < ru.size(); ++n) ru[n] += w * (yu[n] - ru[n]);
    auto& rv = r.vdata();
    const auto& yv = y.vdata();
    for (std::size_t n = 0; n < rv.size(); ++n) rv[n] += w * (yv[n] - rv[n]);
    return r;
}

} // namespace barosplit
