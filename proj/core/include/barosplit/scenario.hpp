#pragma once

#include <string>

#include "barosplit/params.hpp"
#include "barosplit/state.hpp"

namespace barosplit {

/// A complete runnable configuration: grid, physics, initial state, horizon.
struct Scenario {
    std::string name;
    Grid grid;
    int layers = 0;
    PhysicalParams params;
    ModelState initial;
    CellField H;        ///< resting column depth (m)
    double t_end = 0.0; ///< terminal time (s)
};

/// f-plane zonal channel, 44*scale x 16*scale cells at 10/scale km spacing,
/// flat 1000 m bottom, L layers with stably stratified densities. Interfaces
/// carry a meridional tilt whose displacements cancel in the vertical sum
/// (so the depth-mean pressure force nearly vanishes and the tilt drives a
/// baroclinic shear), plus a zonal cosine perturbation of wavelength 3/4 the
/// zonal extent under a periodic window. Velocities start in discrete
/// geostrophic balance with the tilt. With perturbation_amp == 0 the builder
/// instead constructs an exactly balanced zonal state: it prescribes the jet,
/// evaluates the discrete inviscid momentum terms with the production
/// operators and inverts the hydrostatic relation for the thicknesses, so the
/// state is a fixed point of the inviscid dynamics to round-off.
Scenario build_channel_scenario(int scale, int L, double perturbation_amp);

/// Default perturbation amplitude (m) used by the CLI and studies.
inline constexpr double kChannelDefaultAmp = 0.1;

Scenario build_channel_scenario(int scale, int L);

} // namespace barosplit
