#include "barosplit/snapshot.hpp"

#include <fstream>

#include "barosplit/config_file.hpp"
#include "barosplit/csv.hpp"

namespace barosplit {

namespace {

void write_array(std::ofstream& out, const std::vector<double>& v) {
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * sizeof(double)));
}

void read_array(std::ifstream& in, std::vector<double>& v) {
    in.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(double)));
    if (!in) throw ConfigError("snapshot", 0, "snapshot binary is truncated");
}

} // namespace

void write_snapshot(const std::string& base, const ModelState& state, const Grid& grid) {
    const int L = state.stack.layers();
    {
        std::ofstream meta(base + ".meta");
        if (!meta) throw ConfigError("snapshot", 0, "cannot write '" + base + ".meta'");
        meta << "nx = " << grid.nx << "\n"
             << "ny = " << grid.ny << "\n"
             << "dx = " << csv::format_double(grid.dx) << "\n"
             << "dy = " << csv::format_double(grid.dy) << "\n"
             << "boundary = " << to_string(grid.boundary) << "\n"
             << "layers = " << L << "\n"
             << "time = " << csv::format_double(state.time) << "\n"
             << "fields = h,u,v,zeta\n"
             << "dtype = float64 row-major\n";
    }
    std::ofstream bin(base + ".bin", std::ios::binary);
    if (!bin) throw ConfigError("snapshot", 0, "cannot write '" + base + ".bin'");
    for (int k = 0; k < L; ++k) write_array(bin, state.stack.h[k].data());
    for (int k = 0; k < L; ++k) write_array(bin, state.stack.u[k].udata());
    for (int k = 0; k < L; ++k) write_array(bin, state.stack.u[k].vdata());
    write_array(bin, state.zeta.data());
}

LoadedSnapshot read_snapshot(const std::string& base) {
    const ConfigFile meta = ConfigFile::parse_file(base + ".meta");
    const int nx = meta.get_int("nx", 0);
    const int ny = meta.get_int("ny", 0);
    const double dx = meta.get_double("dx", 0.0);
    const double dy = meta.get_double("dy", 0.0);
    const int L = meta.get_int("layers", 0);
    const std::string bstr = meta.get_string("boundary", "doubly-periodic");
    const Boundary b =
        bstr == "zonal-channel" ? Boundary::ZonalChannel : Boundary::DoublyPeriodic;

    LoadedSnapshot snap{Grid(nx, ny, dx, dy, b), ModelState{}};
    snap.state.time = meta.get_double("time", 0.0);
    snap.state.stack = LayerStack::zeros(snap.grid, L);
    snap.state.zeta = CellField::zeros(snap.grid);

    std::ifstream bin(base + ".bin", std::ios::binary);
    if (!bin) throw ConfigError("snapshot", 0, "cannot open '" + base + ".bin'");
    for (int k = 0; k < L; ++k) read_array(bin, snap.state.stack.h[k].data());
    for (int k = 0; k < L; ++k) read_array(bin, snap.state.stack.u[k].udata());
    for (int k = 0; k < L; ++k) read_array(bin, snap.state.stack.u[k].vdata());
    read_array(bin, snap.state.zeta.data());
    return snap;
}

} // namespace barosplit
