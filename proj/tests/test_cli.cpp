#include <cmath>
#include <string>

#include "compwave/csv.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using cwtest::run_cli;
using cwtest::scratch_dir;

TEST_CASE("classify prints the case label and Case-1 constants") {
    const auto dir = scratch_dir("cli_classify");
    const auto r = run_cli("classify", dir);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Case1") == 0);
    CHECK(r.out.find("u_a = -1") != std::string::npos);
    CHECK(r.out.find("u_plus = -2.218951") != std::string::npos);

    const auto r2 = run_cli("--set data.v_minus=-2 --set data.v_plus=0 classify", dir);
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("Case2") == 0);
}

TEST_CASE("malformed config fails with a line/field message") {
    const auto dir = scratch_dir("cli_badcfg");
    cwtest::write_file(dir / "bad.cfg", "stress.a = 1\nmu == oops\n");
    const auto r = run_cli("--config bad.cfg classify", dir);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("profile writes the ansatz snapshot with correct far fields") {
    const auto dir = scratch_dir("cli_profile");
    const auto r = run_cli(
        "--set grid.x_left=-300 --set grid.x_right=400 --set grid.n=701 "
        "--set output_dir=out profile --t 10",
        dir);
    REQUIRE(r.exit_code == 0);
    std::ifstream is(dir / "out" / "profile_t10.csv", std::ios::binary);
    REQUIRE(is.good());
    const auto rows = compwave::parse_csv(is);
    REQUIRE(rows.size() == 702u);
    // far fields at the domain edges: (v-, u-) on the left, (v+, u+) right
    const auto field = [&](std::size_t row, int col) {
        return std::strtod(rows[row][col].c_str(), nullptr);
    };
    CHECK(std::abs(field(1, 1) - 0.0) <= 1e-10);
    CHECK(std::abs(field(1, 2) - 0.0) <= 1e-10);
    CHECK(std::abs(field(701, 1) - 2.0) <= 1e-10);
    CHECK(std::abs(field(701, 2) - (-2.2189514164974605)) <= 1e-10);
    // v^ is monotone in x for this data
    for (std::size_t i = 2; i < rows.size(); ++i)
        CHECK(field(i, 1) >= field(i - 1, 1) - 1e-12);
}

TEST_CASE("profile output is byte-identical across runs") {
    const auto dir = scratch_dir("cli_det_profile");
    const std::string args =
        "--set grid.x_left=-100 --set grid.x_right=150 --set grid.n=251 "
        "--set output_dir=o profile --t 3";
    REQUIRE(run_cli(args, dir).exit_code == 0);
    const std::string first = cwtest::read_file(dir / "o" / "profile_t3.csv");
    REQUIRE(run_cli(args, dir).exit_code == 0);
    CHECK(first == cwtest::read_file(dir / "o" / "profile_t3.csv"));
    CHECK(!first.empty());
}

TEST_CASE("profile requires Case-1 data") {
    const auto dir = scratch_dir("cli_profile_case2");
    const auto r = run_cli("--set data.v_minus=-2 --set data.v_plus=0 profile", dir);
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify passes with beta = 0.05 and fails outside the proof range") {
    const auto dir = scratch_dir("cli_verify");
    const auto ok = run_cli("--set verification.beta=0.05 --set output_dir=vok verify", dir);
    INFO(ok.out);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    CHECK(cwtest::read_file(dir / "vok" / "verify_report.txt").find("all checks passed") !=
          std::string::npos);
    std::ifstream curves(dir / "vok" / "interaction_curves.csv", std::ios::binary);
    REQUIRE(curves.good());
    const auto rows = compwave::parse_csv(curves);
    REQUIRE(rows.size() == 51u);  // header + the 50 scan samples
    CHECK(rows[0][0] == "t");
    CHECK(rows[0][3] == "y1");

    // identical config and seed reproduce the report byte for byte
    const auto again =
        run_cli("--set verification.beta=0.05 --set output_dir=vok2 verify", dir);
    CHECK(again.exit_code == 0);
    CHECK(cwtest::read_file(dir / "vok" / "interaction_curves.csv") ==
          cwtest::read_file(dir / "vok2" / "interaction_curves.csv"));
    CHECK(cwtest::read_file(dir / "vok" / "verify_report.txt") ==
          cwtest::read_file(dir / "vok2" / "verify_report.txt"));

    // beta = 0.9 pushes the Z1 lower-bound locus past the curve
    const auto bad =
        run_cli("--set verification.beta=0.9 --set output_dir=vbad verify", dir);
    CHECK(bad.exit_code == 3);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.err.find("verification failed") != std::string::npos);
}

TEST_CASE("verify warns about sparse sampling but still runs") {
    const auto dir = scratch_dir("cli_verify_sparse");
    const auto r = run_cli(
        "--set verification.beta=0.05 --set verification.t_samples=16 "
        "--set output_dir=vs verify",
        dir);
    CHECK(r.out.find("sparse") != std::string::npos);
}

TEST_CASE("simulate writes diagnostics, snapshots and metadata") {
    const auto dir = scratch_dir("cli_simulate");
    const std::string args =
        "--set grid.x_left=-60 --set grid.x_right=80 --set grid.n=701 "
        "--set solver.T=3 --set solver.snapshot_dt=1 --set output_dir=run simulate";
    const auto r = run_cli(args, dir);
    INFO(r.err);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("sup |(phi,psi)|") != std::string::npos);
    for (const char* name : {"diagnostics.csv", "run_meta.txt", "fit_report.txt",
                             "snapshot_0.csv", "snapshot_3.csv"})
        CHECK(std::filesystem::exists(dir / "run" / name));
    // a 3-unit window spans less than a decade, so the fits report as skipped
    CHECK(cwtest::read_file(dir / "run" / "fit_report.txt").find("sup_perturbation") !=
          std::string::npos);
    const std::string meta = cwtest::read_file(dir / "run" / "run_meta.txt");
    CHECK(meta.find("grid.n = 701") != std::string::npos);
    CHECK(meta.find("cfl = 0.4") != std::string::npos);
    CHECK(meta.find("smallness_delta_plus_h1") != std::string::npos);
    std::ifstream is(dir / "run" / "diagnostics.csv", std::ios::binary);
    const auto rows = compwave::parse_csv(is);
    CHECK(rows.size() == 5u);  // header + snapshots at t = 0,1,2,3
}

TEST_CASE("simulate requires Case-1 data") {
    const auto dir = scratch_dir("cli_simulate_case3");
    const auto r = run_cli("--set data.v_minus=-2 simulate", dir);
    CHECK(r.exit_code == 2);
}

TEST_CASE("unknown subcommand or flag is a usage error") {
    const auto dir = scratch_dir("cli_usage");
    CHECK(run_cli("explode", dir).exit_code == 1);
    CHECK(run_cli("classify --bogus", dir).exit_code == 1);
}
