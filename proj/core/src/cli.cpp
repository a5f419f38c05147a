#include "barosplit/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "barosplit/config_file.hpp"
#include "barosplit/csv.hpp"
#include "barosplit/snapshot.hpp"
#include "barosplit/studies.hpp"

namespace barosplit {

namespace {

const std::vector<std::string> kKnownKeys = {
    "grid.scale",
    "physics.layers", "physics.f", "physics.g", "physics.rho0", "physics.rho",
    "physics.nu_h", "physics.visc_form", "physics.nu_v", "physics.c_drag",
    "physics.amplitude",
    "scheme.name", "scheme.dt", "scheme.m", "scheme.mixing", "scheme.reconcile",
    "scheme.t_end",
    "output.dir", "output.snapshot_interval",
};

struct CommonOptions {
    std::string config_path;
    std::string scenario = "channel";
    int scale = 1;
    int layers = 4;
    double amplitude = kChannelDefaultAmp;
    std::string scheme = "ssprk3se";
    double dt = 16.0;
    int m = 1;
    std::string mixing = "off";
    std::string reconcile = "on";
    double t_end = -1.0; ///< <0: keep the scenario default
    std::string out = "-";
};

bool parse_onoff(const std::string& v, const char* key) {
    if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(key, 0, std::string("option '") + key + "' must be on or off");
}

/// Merge the config file (when given) under the CLI flags and build the
/// scenario plus scheme configuration.
struct ResolvedSetup {
    Scenario scenario;
    SchemeConfig cfg;
    std::string out_dir = ".";
    int snapshot_interval = 0;
};

ResolvedSetup resolve(const CommonOptions& opt, const CLI::App& cmd) {
    ConfigFile file;
    if (!opt.config_path.empty()) {
        file = ConfigFile::parse_file(opt.config_path);
        file.require_known_keys(kKnownKeys);
    }
    auto flag_given = [&](const std::string& name) { return cmd.count(name) > 0; };

    const int scale =
        flag_given("--scale") ? opt.scale : file.get_int("grid.scale", opt.scale);
    const int layers =
        flag_given("--layers") ? opt.layers : file.get_int("physics.layers", opt.layers);
    const double amplitude = flag_given("--amplitude")
                                 ? opt.amplitude
                                 : file.get_double("physics.amplitude", opt.amplitude);

    if (opt.scenario != "channel")
        throw ConfigError("scenario", 0, "unknown scenario '" + opt.scenario + "'");

    ResolvedSetup rs;
    rs.scenario = build_channel_scenario(scale, layers, amplitude);

    PhysicalParams& p = rs.scenario.params;
    p.f = file.get_double("physics.f", p.f);
    p.g = file.get_double("physics.g", p.g);
    p.rho0 = file.get_double("physics.rho0", p.rho0);
    p.nu_h = file.get_double("physics.nu_h", p.nu_h);
    p.nu_v = file.get_double("physics.nu_v", p.nu_v);
    p.c_drag = file.get_double("physics.c_drag", p.c_drag);
    if (file.has("physics.rho")) {
        p.rho = file.get_double_list("physics.rho");
    }
    const std::string vf = file.get_string("physics.visc_form", "laplacian");
    if (vf == "laplacian")
        p.visc_form = ViscForm::Laplacian;
    else if (vf == "biharmonic")
        p.visc_form = ViscForm::Biharmonic;
    else
        throw ConfigError("physics.visc_form", file.line_of("physics.visc_form"),
                          "physics.visc_form must be laplacian or biharmonic");
    p.validate(layers);

    const std::string scheme_name =
        flag_given("--scheme") ? opt.scheme : file.get_string("scheme.name", opt.scheme);
    const auto scheme = parse_scheme(scheme_name);
    if (!scheme)
        throw ConfigError("scheme", file.line_of("scheme.name"),
                          "unknown scheme '" + scheme_name + "'");
    rs.cfg.scheme = *scheme;
    rs.cfg.dt = flag_given("--dt") ? opt.dt : file.get_double("scheme.dt", opt.dt);
    rs.cfg.M = flag_given("--m") ? opt.m : file.get_int("scheme.m", opt.m);
    rs.cfg.mixing = parse_onoff(
        flag_given("--mixing") ? opt.mixing
                               : file.get_string("scheme.mixing", opt.mixing),
        "mixing");
    rs.cfg.reconcile = parse_onoff(
        flag_given("--reconcile") ? opt.reconcile
                                  : file.get_string("scheme.reconcile", opt.reconcile),
        "reconcile");
    if (!(rs.cfg.dt > 0.0))
        throw ConfigError("dt", file.line_of("scheme.dt"), "dt must be positive");
    if (rs.cfg.M < 1)
        throw ConfigError("m", file.line_of("scheme.m"), "m must be >= 1");

    const double t_end =
        flag_given("--t-end") ? opt.t_end : file.get_double("scheme.t_end", opt.t_end);
    if (t_end > 0.0) rs.scenario.t_end = t_end;

    rs.out_dir = file.get_string("output.dir", ".");
    rs.snapshot_interval = file.get_int("output.snapshot_interval", 0);
    return rs;
}

void write_text(const std::string& out, const std::string& text) {
    if (out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ConfigError("out", 0, "cannot write '" + out + "'");
    f << text;
}

int steps_for_horizon(double t_end, double dt) {
    const double n = t_end / dt;
    const int ni = static_cast<int>(std::lround(n));
    if (ni < 1 || std::abs(n - ni) > 1e-9 * std::max(1.0, n))
        throw ConfigError("dt", 0, "dt does not divide the terminal time");
    return ni;
}

int cmd_run(const CommonOptions& opt, const CLI::App& cmd, int steps_flag,
            int snapshot_flag) {
    ResolvedSetup rs = resolve(opt, cmd);
    if (cmd.count("--snapshot-interval")) rs.snapshot_interval = snapshot_flag;
    const int nsteps = cmd.count("--steps") ? steps_flag
                                            : steps_for_horizon(rs.scenario.t_end, rs.cfg.dt);
    std::filesystem::create_directories(rs.out_dir);

    auto snap_base = [&](int step) {
        char name[32];
        std::snprintf(name, sizeof(name), "snapshot_%06d", step);
        return (std::filesystem::path(rs.out_dir) / name).string();
    };

    ModelState st = rs.scenario.initial;
    if (rs.snapshot_interval > 0) write_snapshot(snap_base(0), st, rs.scenario.grid);
    try {
        for (int n = 1; n <= nsteps; ++n) {
            st = advance(st, rs.scenario.H, rs.scenario.grid, rs.scenario.params, rs.cfg);
            if (rs.snapshot_interval > 0 &&
                (n % rs.snapshot_interval == 0 || n == nsteps))
                write_snapshot(snap_base(n), st, rs.scenario.grid);
        }
    } catch (const BlowUpError& e) {
        std::cerr << "blow-up: " << e.what() << " [stage " << e.stage() << ", substep "
                  << e.substep() << "]\n";
        return 3;
    }
    double umax = 0.0;
    for (const auto& u : st.stack.u) umax = std::max(umax, max_abs(u));
    std::cout << "completed steps=" << nsteps << " time=" << csv::format_double(st.time)
              << " max_u=" << csv::format_double(umax)
              << " max_zeta=" << csv::format_double(max_abs(st.zeta)) << "\n";
    return 0;
}

int cmd_converge(const CommonOptions& opt, const CLI::App& cmd,
                 const std::string& dts_text, double ref_dt) {
    ResolvedSetup rs = resolve(opt, cmd);
    std::vector<double> dts;
    {
        std::string cur;
        auto flush = [&]() {
            if (!cur.empty()) {
                dts.push_back(csv::parse_double(cur));
                cur.clear();
            }
        };
        for (char c : dts_text) {
            if (c == ',')
                flush();
            else
                cur += c;
        }
        flush();
    }
    if (dts.empty()) throw ConfigError("dts", 0, "no dt values given");
    ReferenceConfig ref;
    ref.dt = ref_dt;
    const auto rows = run_convergence_study(rs.scenario, rs.cfg.scheme, dts, rs.cfg.M, ref,
                                            rs.cfg.mixing, rs.cfg.reconcile);
    write_text(opt.out, csv::convergence_table(rows));
    return 0;
}

int cmd_taylor(const CommonOptions& opt, const CLI::App& cmd, const std::string& dts_text,
               double f, double gval) {
    (void)cmd;
    std::vector<double> dts;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            dts.push_back(csv::parse_double(cur));
            cur.clear();
        }
    };
    for (char c : dts_text) {
        if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    if (dts.empty()) throw ConfigError("dts", 0, "no dt values given");
    TaylorCheckInput in;
    in.f = f;
    in.g = gval;
    in.ubar0 = {1.0, 0.4};
    in.grad_zeta = {3e-2, -2e-2};
    in.gbar = {0.1, -0.05};
    const auto rows = run_taylor_check(in, dts, opt.m);
    write_text(opt.out, csv::taylor_table(rows));
    return 0;
}

int cmd_stability(const CommonOptions& opt, const CLI::App& cmd,
                  const std::string& dtb_text, int nsteps) {
    ResolvedSetup rs = resolve(opt, cmd);
    std::vector<double> dtb;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            dtb.push_back(csv::parse_double(cur));
            cur.clear();
        }
    };
    for (char c : dtb_text) {
        if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    if (dtb.empty()) throw ConfigError("dt-btrs", 0, "no dt_btr values given");
    const auto report = run_stability_probe(rs.scenario, rs.cfg.scheme, dtb, rs.cfg.M, nsteps,
                                            rs.cfg.mixing, rs.cfg.reconcile);
    write_text(opt.out, csv::stability_table(report));
    if (report.largest_stable_dt_btr)
        std::cerr << "largest stable dt_btr: " << csv::format_double(*report.largest_stable_dt_btr)
                  << "\n";
    else
        std::cerr << "no stable dt_btr in the sweep\n";
    return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"layered split-explicit dynamics core"};
    app.require_subcommand(1);

    CommonOptions opt;
    int steps_flag = 0;
    int snapshot_flag = 0;
    std::string dts_text = "32,16,8,4,2";
    std::string dtb_text = "4,8,12,16,24,32,48,64";
    double ref_dt = 0.25;
    double taylor_f = 1.0;
    double taylor_g = 9.81;
    int probe_steps = 1000;

    auto add_common = [&](CLI::App* cmd, bool wants_scheme) {
        cmd->add_option("--config", opt.config_path, "configuration file (key = value)");
        cmd->add_option("--scenario", opt.scenario, "scenario name (channel)");
        cmd->add_option("--scale", opt.scale, "resolution scale factor");
        cmd->add_option("--layers", opt.layers, "layer count");
        cmd->add_option("--amplitude", opt.amplitude, "perturbation amplitude (m)");
        cmd->add_option("--m", opt.m, "barotropic substeps per slow step");
        cmd->add_option("--out", opt.out, "output path ('-' for stdout)");
        if (wants_scheme) {
            cmd->add_option("--scheme", opt.scheme,
                            "ssprk2se | ssprk3se | fese | unsplit");
            cmd->add_option("--dt", opt.dt, "slow time step (s)");
            cmd->add_option("--mixing", opt.mixing, "implicit vertical mixing (on/off)");
            cmd->add_option("--reconcile", opt.reconcile, "SSH reconciliation (on/off)");
            cmd->add_option("--t-end", opt.t_end, "terminal time (s)");
        }
    };

    CLI::App* run = app.add_subcommand("run", "advance one simulation, writing snapshots");
    add_common(run, true);
    run->add_option("--steps", steps_flag, "number of steps (overrides t-end)");
    run->add_option("--snapshot-interval", snapshot_flag, "steps between snapshots");

    CLI::App* conv = app.add_subcommand("converge", "temporal convergence study (CSV)");
    add_common(conv, true);
    conv->add_option("--dts", dts_text, "comma-separated halving dt list");
    conv->add_option("--ref-dt", ref_dt, "reference solution dt (s)");

    CLI::App* taylor = app.add_subcommand("taylor", "substepping expansion residual check (CSV)");
    taylor->add_option("--m", opt.m, "barotropic substeps per slow step");
    taylor->add_option("--dts", dts_text, "comma-separated halving dt list");
    taylor->add_option("--f", taylor_f, "Coriolis parameter");
    taylor->add_option("--g", taylor_g, "gravity");
    taylor->add_option("--out", opt.out, "output path ('-' for stdout)");

    CLI::App* stab = app.add_subcommand("stability", "largest stable dt_btr probe (CSV)");
    add_common(stab, true);
    stab->add_option("--dt-btrs", dtb_text, "comma-separated dt_btr sweep");
    stab->add_option("--steps", probe_steps, "steps per probe run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return cmd_run(opt, *run, steps_flag, snapshot_flag);
        if (conv->parsed()) return cmd_converge(opt, *conv, dts_text, ref_dt);
        if (taylor->parsed()) return cmd_taylor(opt, *taylor, dts_text, taylor_f, taylor_g);
        if (stab->parsed()) return cmd_stability(opt, *stab, dtb_text, probe_steps);
    } catch (const ConfigError& e) {
        std::cerr << "config error";
        if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace barosplit
