#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "barosplit/errors.hpp"

namespace barosplit {

enum class Boundary {
    DoublyPeriodic, ///< periodic in x and y
    ZonalChannel    ///< periodic in x, free-slip solid walls in y
};

std::string to_string(Boundary b);

/// Uniform structured C-grid. Scalars live at cell centers, the u-velocity
/// component on west cell faces (x-interfaces) and the v-component on south
/// cell faces (y-interfaces). x wraps in both boundary modes. In channel mode
/// the v array has ny+1 rows; rows 0 and ny are the walls and are pinned to
/// zero for every field stored on v-faces.
struct Grid {
    int nx = 0;
    int ny = 0;
    double dx = 0.0;
    double dy = 0.0;
    Boundary boundary = Boundary::DoublyPeriodic;

    Grid() = default;
    Grid(int nx_, int ny_, double dx_, double dy_, Boundary b);

    bool periodic_y() const { return boundary == Boundary::DoublyPeriodic; }
    int vrows() const { return periodic_y() ? ny : ny + 1; }
    /// Corner (vertex) rows; x-interfaces x y-interfaces.
    int crows() const { return vrows(); }

    int cell_count() const { return nx * ny; }

    bool operator==(const Grid&) const = default;
};

namespace detail {
inline int wrap(int i, int n) {
    i %= n;
    return i < 0 ? i + n : i;
}
} // namespace detail

/// Scalar field at cell centers (nx columns, ny rows, row-major).
class CellField {
public:
    CellField() = default;
    CellField(int nx, int ny, double fill = 0.0)
        : nx_(nx), ny_(ny), data_(static_cast<std::size_t>(nx) * ny, fill) {}

    static CellField zeros(const Grid& g) { return CellField(g.nx, g.ny); }
    static CellField constant(const Grid& g, double c) { return CellField(g.nx, g.ny, c); }

    int nx() const { return nx_; }
    int ny() const { return ny_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * nx_ + i]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(j) * nx_ + i]; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool shape_matches(const Grid& g) const { return nx_ == g.nx && ny_ == g.ny; }

private:
    int nx_ = 0, ny_ = 0;
    std::vector<double> data_;
};

/// Velocity (or face flux) field on the C-grid staggering: u on x-interfaces
/// (nx x ny), v on y-interfaces (nx x vrows). Channel wall rows of v are kept
/// at zero by construction; code that writes v must preserve that.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(const Grid& g)
        : nx_(g.nx), ny_(g.ny), vrows_(g.vrows()),
          u_(static_cast<std::size_t>(g.nx) * g.ny, 0.0),
          v_(static_cast<std::size_t>(g.nx) * g.vrows(), 0.0) {}

    static VectorField zeros(const Grid& g) { return VectorField(g); }
    /// Uniform field (a,b). In channel mode the wall v rows stay zero.
    static VectorField constant(const Grid& g, double a, double b);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int vrows() const { return vrows_; }

    double& u(int i, int j) { return u_[static_cast<std::size_t>(j) * nx_ + i]; }
    double u(int i, int j) const { return u_[static_cast<std::size_t>(j) * nx_ + i]; }
    double& v(int i, int j) { return v_[static_cast<std::size_t>(j) * nx_ + i]; }
    double v(int i, int j) const { return v_[static_cast<std::size_t>(j) * nx_ + i]; }

    std::vector<double>& udata() { return u_; }
    const std::vector<double>& udata() const { return u_; }
    std::vector<double>& vdata() { return v_; }
    const std::vector<double>& vdata() const { return v_; }

    bool shape_matches(const Grid& g) const {
        return nx_ == g.nx && ny_ == g.ny && vrows_ == g.vrows();
    }

private:
    int nx_ = 0, ny_ = 0, vrows_ = 0;
    std::vector<double> u_, v_;
};

/// Scalar field at cell corners (vorticity lives here).
class CornerField {
public:
    CornerField() = default;
    explicit CornerField(const Grid& g)
        : nx_(g.nx), rows_(g.crows()), data_(static_cast<std::size_t>(g.nx) * g.crows(), 0.0) {}

    int nx() const { return nx_; }
    int rows() const { return rows_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * nx_ + i]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(j) * nx_ + i]; }

    const std::vector<double>& data() const { return data_; }

private:
    int nx_ = 0, rows_ = 0;
    std::vector<double> data_;
};

bool all_finite(const CellField& f);
bool all_finite(const VectorField& f);

void require_shape(const CellField& f, const Grid& g, const char* what);
void require_shape(const VectorField& f, const Grid& g, const char* what);

/// Fixed-order (row-major) sum; runs are bit-reproducible.
double sum(const std::vector<double>& v);
double max_abs(const CellField& f);
double max_abs(const VectorField& f);

// In-place field arithmetic used throughout the steppers. All operands must
// share a shape; no checks here (callers validated against the grid already).
void axpy(double a, const CellField& x, CellField& y);    // y += a*x
void axpy(double a, const VectorField& x, VectorField& y);
CellField lincomb(double a, const CellField& x, double b, const CellField& y);
VectorField lincomb(double a, const VectorField& x, double b, const VectorField& y);

// Convex stage combination (1-w)*x + w*y evaluated as x + w*(y - x), which is
// exact when y == x so fixed points survive the 1/3- and 3/4-weight stages.
CellField convex(const CellField& x, double w, const CellField& y);
VectorField convex(const VectorField& x, double w, const VectorField& y);

} // namespace barosplit
