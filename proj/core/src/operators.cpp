#include "barosplit/operators.hpp"

#include <cmath>

namespace barosplit {

using detail::wrap;

VectorField gradient(const CellField& s, const Grid& g) {
    require_shape(s, g, "gradient");
    VectorField r(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            r.u(i, j) = (s(i, j) - s(wrap(i - 1, g.nx), j)) / g.dx;
    if (g.periodic_y()) {
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                r.v(i, j) = (s(i, j) - s(i, wrap(j - 1, g.ny))) / g.dy;
    } else {
        for (int j = 1; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                r.v(i, j) = (s(i, j) - s(i, j - 1)) / g.dy;
    }
    return r;
}

CellField divergence(const VectorField& F, const Grid& g) {
    require_shape(F, g, "divergence");
    CellField r(g.nx, g.ny);
    const bool per = g.periodic_y();
    for (int j = 0; j < g.ny; ++j) {
        const int jn = per ? wrap(j + 1, g.ny) : j + 1;
        for (int i = 0; i < g.nx; ++i) {
            const double du = F.u(wrap(i + 1, g.nx), j) - F.u(i, j);
            const double dv = F.v(i, jn) - F.v(i, j);
            r(i, j) = du / g.dx + dv / g.dy;
        }
    }
    return r;
}

VectorField perp(const VectorField& F, const Grid& g) {
    require_shape(F, g, "perp");
    VectorField r(g);
    const bool per = g.periodic_y();
    // x-component: -average of the 4 surrounding v-faces.
    for (int j = 0; j < g.ny; ++j) {
        const int js = j;
        const int jn = per ? wrap(j + 1, g.ny) : j + 1;
        const bool s_wall = !per && js == 0;
        const bool n_wall = !per && jn == g.ny;
        for (int i = 0; i < g.nx; ++i) {
            const int iw = wrap(i - 1, g.nx);
            double acc = 0.0;
            int cnt = 0;
            if (!s_wall) { acc += F.v(iw, js) + F.v(i, js); cnt += 2; }
            if (!n_wall) { acc += F.v(iw, jn) + F.v(i, jn); cnt += 2; }
            r.u(i, j) = -acc / cnt;
        }
    }
    // y-component: +average of the 4 surrounding u-faces.
    const int j0 = per ? 0 : 1;
    const int j1 = per ? g.ny : g.ny; // channel: interior rows 1..ny-1
    for (int j = j0; j < j1; ++j) {
        const int jc = j;                                  // cell row above the face
        const int jb = per ? wrap(j - 1, g.ny) : j - 1;    // cell row below
        for (int i = 0; i < g.nx; ++i) {
            const int ie = wrap(i + 1, g.nx);
            r.v(i, j) = 0.25 * (F.u(i, jb) + F.u(ie, jb) + F.u(i, jc) + F.u(ie, jc));
        }
    }
    return r;
}

std::pair<CornerField, CellField> vorticity_and_ke(const VectorField& F, const Grid& g) {
    require_shape(F, g, "vorticity_and_ke");
    CornerField w(g);
    const bool per = g.periodic_y();
    const int j0 = per ? 0 : 1;
    const int j1 = per ? g.ny : g.ny; // channel: wall corner rows 0 and ny stay 0
    for (int j = j0; j < j1; ++j) {
        const int jb = per ? wrap(j - 1, g.ny) : j - 1;
        for (int i = 0; i < g.nx; ++i) {
            const int iw = wrap(i - 1, g.nx);
            w(i, j) = (F.v(i, j) - F.v(iw, j)) / g.dx - (F.u(i, j) - F.u(i, jb)) / g.dy;
        }
    }
    CellField ke(g.nx, g.ny);
    for (int j = 0; j < g.ny; ++j) {
        const int jn = per ? wrap(j + 1, g.ny) : j + 1;
        for (int i = 0; i < g.nx; ++i) {
            const int ie = wrap(i + 1, g.nx);
            const double uu = F.u(i, j) * F.u(i, j) + F.u(ie, j) * F.u(ie, j);
            const double vv = F.v(i, j) * F.v(i, j) + F.v(i, jn) * F.v(i, jn);
            ke(i, j) = 0.5 * (0.5 * uu + 0.5 * vv);
        }
    }
    return {std::move(w), std::move(ke)};
}

VectorField laplacian(const VectorField& F, const Grid& g) {
    require_shape(F, g, "laplacian");
    VectorField r(g);
    const bool per = g.periodic_y();
    const double idx2 = 1.0 / (g.dx * g.dx);
    const double idy2 = 1.0 / (g.dy * g.dy);
    for (int j = 0; j < g.ny; ++j) {
        // Free-slip: mirror u across the walls (zero tangential derivative).
        const int js = per ? wrap(j - 1, g.ny) : (j > 0 ? j - 1 : 0);
        const int jn = per ? wrap(j + 1, g.ny) : (j < g.ny - 1 ? j + 1 : g.ny - 1);
        for (int i = 0; i < g.nx; ++i) {
            const int iw = wrap(i - 1, g.nx);
            const int ie = wrap(i + 1, g.nx);
            r.u(i, j) = (F.u(ie, j) - 2.0 * F.u(i, j) + F.u(iw, j)) * idx2 +
                        (F.u(i, jn) - 2.0 * F.u(i, j) + F.u(i, js)) * idy2;
        }
    }
    const int j0 = per ? 0 : 1;
    const int j1 = per ? g.ny : g.ny;
    for (int j = j0; j < j1; ++j) {
        const int js = per ? wrap(j - 1, g.ny) : j - 1;
        const int jn = per ? wrap(j + 1, g.ny) : j + 1; // wall rows hold zeros
        for (int i = 0; i < g.nx; ++i) {
            const int iw = wrap(i - 1, g.nx);
            const int ie = wrap(i + 1, g.nx);
            r.v(i, j) = (F.v(ie, j) - 2.0 * F.v(i, j) + F.v(iw, j)) * idx2 +
                        (F.v(i, jn) - 2.0 * F.v(i, j) + F.v(i, js)) * idy2;
        }
    }
    return r;
}

VectorField biharmonic(const VectorField& F, const Grid& g) {
    return laplacian(laplacian(F, g), g);
}

VectorField face_average(const CellField& s, const Grid& g) {
    require_shape(s, g, "face_average");
    VectorField r(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            r.u(i, j) = 0.5 * (s(wrap(i - 1, g.nx), j) + s(i, j));
    if (g.periodic_y()) {
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                r.v(i, j) = 0.5 * (s(i, wrap(j - 1, g.ny)) + s(i, j));
    } else {
        for (int j = 1; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                r.v(i, j) = 0.5 * (s(i, j - 1) + s(i, j));
        for (int i = 0; i < g.nx; ++i) {
            r.v(i, 0) = s(i, 0);
            r.v(i, g.ny) = s(i, g.ny - 1);
        }
    }
    return r;
}

VectorField vorticity_to_faces(const CornerField& w, const Grid& g) {
    VectorField r(g);
    const bool per = g.periodic_y();
    for (int j = 0; j < g.ny; ++j) {
        const int jn = per ? wrap(j + 1, g.ny) : j + 1;
        for (int i = 0; i < g.nx; ++i)
            r.u(i, j) = 0.5 * (w(i, j) + w(i, jn));
    }
    const int j0 = per ? 0 : 1;
    for (int j = j0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            r.v(i, j) = 0.5 * (w(i, j) + w(wrap(i + 1, g.nx), j));
    return r;
}

VectorField face_speed(const VectorField& F, const Grid& g) {
    require_shape(F, g, "face_speed");
    VectorField r(g);
    const bool per = g.periodic_y();
    for (int j = 0; j < g.ny; ++j) {
        const int js = j;
        const int jn = per ? wrap(j + 1, g.ny) : j + 1;
        const bool s_wall = !per && js == 0;
        const bool n_wall = !per && jn == g.ny;
        for (int i = 0; i < g.nx; ++i) {
            const int iw = wrap(i - 1, g.nx);
            double acc = 0.0;
            int cnt = 0;
            if (!s_wall) { acc += F.v(iw, js) + F.v(i, js); cnt += 2; }
            if (!n_wall) { acc += F.v(iw, jn) + F.v(i, jn); cnt += 2; }
            r.u(i, j) = std::hypot(F.u(i, j), acc / cnt);
        }
    }
    const int j0 = per ? 0 : 1;
    for (int j = j0; j < g.ny; ++j) {
        const int jc = j;
        const int jb = per ? wrap(j - 1, g.ny) : j - 1;
        for (int i = 0; i < g.nx; ++i) {
            const int ie = wrap(i + 1, g.nx);
            const double ubar =
                0.25 * (F.u(i, jb) + F.u(ie, jb) + F.u(i, jc) + F.u(ie, jc));
            r.v(i, j) = std::hypot(F.v(i, j), ubar);
        }
    }
    return r;
}

VectorField multiply(const VectorField& a, const VectorField& b) {
    if (a.nx() != b.nx() || a.ny() != b.ny() || a.vrows() != b.vrows())
        throw DimensionError("multiply: vector field shapes differ");
    VectorField r = a;
    auto& ru = r.udata();
    const auto& bu = b.udata();
    for (std::size_t n = 0; n < ru.size(); ++n) ru[n] *= bu[n];
    auto& rv = r.vdata();
    const auto& bv = b.vdata();
    for (std::size_t n = 0; n < rv.size(); ++n) rv[n] *= bv[n];
    return r;
}

VectorField flux_field(const CellField& s, const VectorField& u, const Grid& g) {
    return multiply(face_average(s, g), u);
}

} // namespace barosplit
