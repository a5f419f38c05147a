#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "barosplit/cli.hpp"
#include "barosplit/config_file.hpp"
#include "barosplit/csv.hpp"
#include "barosplit/metrics.hpp"
#include "barosplit/scenario.hpp"
#include "barosplit/snapshot.hpp"
#include "barosplit/studies.hpp"
#include "test_support.hpp"

using namespace barosplit;

TEST_CASE("channel scenario construction") {
    const Scenario sc = build_channel_scenario(1, 4);
    CHECK(sc.grid.nx == 44);
    CHECK(sc.grid.ny == 16);
    CHECK(sc.grid.dx == doctest::Approx(1e4));
    CHECK(sc.grid.boundary == Boundary::ZonalChannel);
    CHECK(sc.layers == 4);

    double hmin = 1e9;
    for (const auto& h : sc.initial.stack.h)
        for (double x : h.data()) hmin = std::min(hmin, x);
    CHECK(hmin > 0.0);
    CHECK(hmin > 20.0); // tilts are tiny against the 25 m layers

    // zeta is consistent with the thickness sum by construction
    const CellField z = ssh_from_thickness(sc.initial.stack.h, sc.H);
    CHECK(testsup::max_abs_diff(z, sc.initial.zeta) == 0.0);

    const Scenario sc2 = build_channel_scenario(2, 4);
    CHECK(sc2.grid.nx == 88);
    CHECK(sc2.grid.dx == doctest::Approx(sc.grid.dx / 2.0));
    CHECK(sc2.grid.dy == doctest::Approx(sc.grid.dy / 2.0));

    CHECK_THROWS_AS(build_channel_scenario(0, 4), ConfigError);
    CHECK_THROWS_AS(build_channel_scenario(1, 1), ConfigError);
}

TEST_CASE("zero-amplitude channel is a near fixed point of the inviscid dynamics") {
    Scenario sc = build_channel_scenario(1, 4, 0.0);
    sc.params.nu_h = 0.0;
    sc.params.nu_v = 0.0;
    sc.params.c_drag = 0.0;
    double u0 = 0.0;
    for (const auto& u : sc.initial.stack.u) u0 = std::max(u0, max_abs(u));
    REQUIRE(u0 > 0.1);

    SchemeConfig cfg{Scheme::Ssprk3Se, 64.0, 4, false, true};
    const ModelState out = ssprk3_se_step(sc.initial, sc.H, sc.grid, sc.params, cfg);
    double du = 0.0;
    for (int k = 0; k < 4; ++k)
        du = std::max(du, testsup::max_abs_diff(out.stack.u[k], sc.initial.stack.u[k]));
    CHECK(du / u0 < 1e-8);
}

TEST_CASE("relative l2 metric") {
    const Grid g(5, 5, 1.0, 1.0, Boundary::DoublyPeriodic);
    std::mt19937 rng(8);
    const CellField ref = testsup::random_cell(g, rng, 0.5, 2.0);
    CHECK(relative_l2(ref, ref) == 0.0);
    const CellField twice = lincomb(2.0, ref, 0.0, ref);
    CHECK(relative_l2(twice, ref) == doctest::Approx(1.0));

    // direct-loop oracle on an independent pair
    const CellField test = testsup::random_cell(g, rng, 0.5, 2.0);
    double d2 = 0.0, r2 = 0.0;
    for (std::size_t n = 0; n < ref.data().size(); ++n) {
        d2 += (test.data()[n] - ref.data()[n]) * (test.data()[n] - ref.data()[n]);
        r2 += ref.data()[n] * ref.data()[n];
    }
    CHECK(relative_l2(test, ref) == doctest::Approx(std::sqrt(d2 / r2)).epsilon(1e-14));

    CHECK_THROWS_AS(relative_l2(ref, CellField::zeros(g)), MetricError);
}

TEST_CASE("taylor oracle basics") {
    SUBCASE("no forces, no residual") {
        TaylorCheckInput in;
        in.f = 0.0;
        in.g = 0.0;
        in.gbar = {0.0, 0.0};
        const auto rows = run_taylor_check(in, {0.5, 0.25}, 4);
        CHECK(rows[0].residual == 0.0);
        CHECK(rows[1].residual == 0.0);
    }
    SUBCASE("M=1 third-order coefficient vanishes") {
        TaylorCheckInput in;
        in.f = 1.1;
        in.g = 9.81;
        in.grad_zeta = {2e-2, -1e-2};
        in.gbar = {0.05, 0.02};
        // the three-term series reduces to the two-term series at M = 1
        const double dt = 0.3;
        const double Fx = in.f * -in.ubar0[1] + in.g * in.grad_zeta[0] - in.gbar[0];
        const double Fy = in.f * in.ubar0[0] + in.g * in.grad_zeta[1] - in.gbar[1];
        const double Ex = in.f * -Fy, Ey = in.f * Fx;
        const auto full = taylor_expansion(in, dt, 1);
        CHECK(full[0] == doctest::Approx(in.ubar0[0] - dt * Fx + 0.5 * dt * dt * Ex));
        CHECK(full[1] == doctest::Approx(in.ubar0[1] - dt * Fy + 0.5 * dt * dt * Ey));
        // and one substep of the two-stage recursion IS its own series on
        // this linear coefficient class, so the M=1 residual sits at the
        // floating-point floor
        const auto rows = run_taylor_check(in, {0.4, 0.2, 0.1}, 1);
        for (const auto& row : rows) CHECK(row.residual < 1e-14);
    }
    SUBCASE("M=4 residual is quartic") {
        TaylorCheckInput in;
        in.f = 1.0;
        in.g = 9.81;
        in.grad_zeta = {3e-2, -2e-2};
        in.gbar = {0.1, -0.05};
        const auto rows = run_taylor_check(in, {0.4, 0.2, 0.1, 0.05}, 4);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            REQUIRE(rows[i].exponent.has_value());
            CHECK(*rows[i].exponent > 3.7);
        }
    }
}

TEST_CASE("csv formatting round-trips exactly") {
    CHECK(csv::format_double(0.0003632) == "3.632E-04");
    for (double x : {1.0 / 3.0, 2.0, 1e-17, -4.375e8, 0.0}) {
        CHECK(csv::parse_double(csv::format_double(x)) == x);
    }
    std::vector<ConvergenceRow> rows(3);
    rows[0] = {64.0, 16.0, 4, 1.0 / 3.0, std::nullopt, 1e-5, std::nullopt, true};
    rows[1] = {32.0, 8.0, 4, 0.21e-1, 2.017, 7e-6 / 3.0, 1.99, true};
    rows[2] = {16.0, 4.0, 4, std::nullopt, std::nullopt, std::nullopt, std::nullopt, false};
    const std::string text = csv::convergence_table(rows);
    CHECK(text.substr(0, text.find('\r')) == "dt,dt_btr,M,err_u,rate_u,err_h,rate_h,status");
    const auto back = csv::parse_convergence_table(text);
    REQUIRE(back.size() == 3);
    CHECK(back[0].err_u == rows[0].err_u);
    CHECK(back[1].rate_u == rows[1].rate_u);
    CHECK(back[1].err_h == rows[1].err_h);
    CHECK_FALSE(back[2].ok);
    CHECK_FALSE(back[2].err_u.has_value());
    // emitting the parsed rows reproduces the byte stream
    CHECK(csv::convergence_table(back) == text);
}

TEST_CASE("config file parsing and errors") {
    const std::string text =
        "# comment\n"
        "[grid]\n"
        "scale = 2\n"
        "[scheme]\n"
        "name = ssprk2se\n"
        "dt = 16.0\n"
        "mixing = off\n";
    const ConfigFile cfg = ConfigFile::parse_string(text);
    CHECK(cfg.get_int("grid.scale", 1) == 2);
    CHECK(cfg.get_string("scheme.name", "") == "ssprk2se");
    CHECK(cfg.get_bool("scheme.mixing", true) == false);
    CHECK(cfg.line_of("scheme.dt") == 6);

    CHECK_THROWS_AS(ConfigFile::parse_string("foo\n"), ConfigError);
    try {
        cfg.require_known_keys({"grid.scale", "scheme.name", "scheme.dt"});
        FAIL("expected unknown-key error");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "scheme.mixing");
        CHECK(e.line() == 7);
    }
    CHECK_THROWS_AS(ConfigFile::parse_file("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("convergence study on a tiny case") {
    {
        Scenario sc = build_channel_scenario(1, 2);
        sc.t_end = 128.0;
        ReferenceConfig ref;
        ref.dt = 1.0;
        SUBCASE("rate arithmetic is self-consistent") {
            const auto rows =
                run_convergence_study(sc, Scheme::Ssprk2Se, {32.0, 16.0}, 1, ref);
            REQUIRE(rows.size() == 2);
            REQUIRE(rows[1].rate_u.has_value());
            CHECK(*rows[1].err_u * std::pow(2.0, *rows[1].rate_u) ==
                  doctest::Approx(*rows[0].err_u).epsilon(1e-12));
        }
        SUBCASE("the reference configuration reproduces itself") {
            const auto rows = run_convergence_study(
                sc, Scheme::UnsplitSsprk3Reference, {1.0}, 1, ref);
            REQUIRE(rows[0].ok);
            CHECK(*rows[0].err_u < 1e-12);
            CHECK(*rows[0].err_h < 1e-12);
        }
        SUBCASE("bad dt lists are rejected") {
            CHECK_THROWS_AS(
                run_convergence_study(sc, Scheme::Ssprk2Se, {32.0, 20.0}, 1, ref),
                ConfigError);
            CHECK_THROWS_AS(
                run_convergence_study(sc, Scheme::Ssprk2Se, {48.0, 24.0}, 1, ref),
                ConfigError); // 48 does not divide 128
        }
    }
}

TEST_CASE("stability probe reports divergence as data") {
    Scenario sc = build_channel_scenario(1, 2);
    const auto report =
        run_stability_probe(sc, Scheme::Ssprk3Se, {2.0, 2000.0}, 1, 20);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].bounded);
    CHECK_FALSE(report.rows[1].bounded);
    REQUIRE(report.largest_stable_dt_btr.has_value());
    CHECK(*report.largest_stable_dt_btr == 2.0);
    const std::string text = csv::stability_table(report);
    CHECK(text.find("N/A") != std::string::npos);
}

TEST_CASE("snapshots round-trip bit exactly") {
    const Scenario sc = build_channel_scenario(1, 2);
    const auto dir = std::filesystem::temp_directory_path() / "barosplit_snap_test";
    std::filesystem::create_directories(dir);
    const std::string base = (dir / "snap").string();
    write_snapshot(base, sc.initial, sc.grid);
    const LoadedSnapshot snap = read_snapshot(base);
    CHECK(snap.grid == sc.grid);
    CHECK(snap.state.time == sc.initial.time);
    for (int k = 0; k < 2; ++k) {
        CHECK(snap.state.stack.h[k].data() == sc.initial.stack.h[k].data());
        CHECK(snap.state.stack.u[k].udata() == sc.initial.stack.u[k].udata());
        CHECK(snap.state.stack.u[k].vdata() == sc.initial.stack.u[k].vdata());
    }
    CHECK(snap.state.zeta.data() == sc.initial.zeta.data());
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli contract") {
    const auto dir = std::filesystem::temp_directory_path() / "barosplit_cli_test";
    std::filesystem::create_directories(dir);

    SUBCASE("converge emits the documented header") {
        const std::string out = (dir / "conv.csv").string();
        const char* argv[] = {"barosplit", "converge", "--scenario", "channel",
                              "--layers",  "2",        "--scheme",   "ssprk2se",
                              "--m",       "2",        "--dts",      "32,16",
                              "--t-end",   "64",       "--ref-dt",   "1",
                              "--out",     out.c_str()};
        CHECK(cli_main(static_cast<int>(std::size(argv)), argv) == 0);
        std::ifstream f(out);
        std::string header;
        std::getline(f, header);
        if (!header.empty() && header.back() == '\r') header.pop_back();
        CHECK(header == "dt,dt_btr,M,err_u,rate_u,err_h,rate_h,status");
    }

    SUBCASE("negative dt in a config file names the key and exits 2") {
        const std::string cfg_path = (dir / "bad.cfg").string();
        {
            std::ofstream f(cfg_path);
            f << "[scheme]\ndt = -4\n";
        }
        const char* argv[] = {"barosplit", "run", "--config", cfg_path.c_str(), "--steps", "1"};
        CHECK(cli_main(static_cast<int>(std::size(argv)), argv) == 2);
    }

    SUBCASE("unknown config key exits 2") {
        const std::string cfg_path = (dir / "unknown.cfg").string();
        {
            std::ofstream f(cfg_path);
            f << "[scheme]\nwavelength = 4\n";
        }
        const char* argv[] = {"barosplit", "run", "--config", cfg_path.c_str(), "--steps", "1"};
        CHECK(cli_main(static_cast<int>(std::size(argv)), argv) == 2);
    }

    SUBCASE("missing config file exits 2") {
        const char* argv[] = {"barosplit", "run", "--config", "/no/such/file.cfg"};
        CHECK(cli_main(static_cast<int>(std::size(argv)), argv) == 2);
    }

    SUBCASE("taylor subcommand writes its table") {
        const std::string out = (dir / "taylor.csv").string();
        const char* argv[] = {"barosplit", "taylor", "--m", "4", "--dts", "0.4,0.2,0.1",
                              "--out", out.c_str()};
        CHECK(cli_main(static_cast<int>(std::size(argv)), argv) == 0);
        std::ifstream f(out);
        std::string header;
        std::getline(f, header);
        if (!header.empty() && header.back() == '\r') header.pop_back();
        CHECK(header == "dt,residual,exponent");
    }

    std::filesystem::remove_all(dir);
}

TEST_CASE("run subcommand writes replayable snapshots and reports blow-ups") {
    const auto dir = std::filesystem::temp_directory_path() / "barosplit_run_test";
    std::filesystem::create_directories(dir);
    const std::string cfg_path = (dir / "run.cfg").string();
    {
        std::ofstream f(cfg_path);
        f << "[physics]\nlayers = 2\n[scheme]\nname = ssprk3se\ndt = 32\nm = 2\n"
          << "[output]\ndir = " << dir.string() << "\nsnapshot_interval = 2\n";
    }
    const char* argv[] = {"barosplit", "run", "--config", cfg_path.c_str(), "--steps", "4"};
    CHECK(cli_main(static_cast<int>(std::size(argv)), argv) == 0);
    CHECK(std::filesystem::exists(dir / "snapshot_000000.bin"));
    CHECK(std::filesystem::exists(dir / "snapshot_000004.meta"));
    const LoadedSnapshot snap = read_snapshot((dir / "snapshot_000004").string());
    CHECK(snap.state.time == doctest::Approx(128.0));

    const char* argv_blow[] = {"barosplit", "run",  "--config", cfg_path.c_str(),
                               "--dt",      "1e9",  "--steps",  "1"};
    CHECK(cli_main(static_cast<int>(std::size(argv_blow)), argv_blow) == 3);
    std::filesystem::remove_all(dir);
}
