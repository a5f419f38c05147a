#pragma once

#include <vector>

#include "barosplit/grid.hpp"

namespace barosplit {

enum class ViscForm { Laplacian, Biharmonic };

/// Physical constants and coefficients for a layered run.
/// rho is ordered top to bottom and must increase downward.
struct PhysicalParams {
    double f = 0.0;       ///< Coriolis parameter (1/s)
    double g = 9.81;      ///< gravity (m/s^2)
    double rho0 = 1025.0; ///< reference density (kg/m^3)
    std::vector<double> rho; ///< per-layer density (kg/m^3), size L
    double nu_h = 0.0;    ///< horizontal viscosity (m^2/s or m^4/s)
    ViscForm visc_form = ViscForm::Laplacian;
    double nu_v = 0.0;    ///< vertical viscosity (m^2/s)
    double c_drag = 0.0;  ///< bottom drag coefficient (dimensionless)
    CellField p_s;        ///< surface pressure (Pa); empty means zero

    void validate(int layers) const;
    bool has_surface_pressure() const { return p_s.nx() > 0; }
};

} // namespace barosplit
