#pragma once

#include <string>

#include "barosplit/state.hpp"

namespace barosplit {

/// State snapshot on disk: <base>.bin holds raw little-endian float64 arrays
/// in the order h_0..h_{L-1}, u_0..u_{L-1}, v_0..v_{L-1}, zeta (row-major);
/// <base>.meta is a small text sidecar with the grid dims, layer count and
/// time, enough to reload the state.
void write_snapshot(const std::string& base, const ModelState& state, const Grid& grid);

struct LoadedSnapshot {
    Grid grid;
    ModelState state;
};
LoadedSnapshot read_snapshot(const std::string& base);

} // namespace barosplit
