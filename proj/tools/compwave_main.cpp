// compwave: composite-wave laboratory for a 1D viscoelastic model with a
// non-convex stress law. Subcommands:
//   classify  - label the far-field data and print the Case-1 constants
//   profile   - write an ansatz snapshot CSV at a requested time
//   verify    - run the wave/interaction/source verification battery
//   simulate  - integrate the viscous system and write diagnostics
//
// Exit codes: 0 ok, 1 config/usage/IO error, 2 data not Case 1,
//             3 verification failure, 4 solver blow-up.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <vector>

#include "CLI11.hpp"
#include "compwave/config.hpp"
#include "compwave/csv.hpp"
#include "compwave/diagnostics.hpp"
#include "compwave/solver.hpp"
#include "compwave/verify.hpp"

namespace fs = std::filesystem;
using namespace compwave;

namespace {

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> overrides;
};

ExperimentConfig load_config(const CommonOpts& opts) {
    ExperimentConfig cfg;
    if (!opts.config_path.empty()) cfg = parse_config_file(opts.config_path);
    for (const std::string& o : opts.overrides) apply_override(cfg, o);
    validate(cfg);
    return cfg;
}

WaveAnsatz make_ansatz(const ExperimentConfig& cfg) {
    const StressModel model = StressModel::make(cfg.stress.a, cfg.stress.b, cfg.stress.k);
    const FarFieldData data = build_case1(model, cfg.data.v_minus, cfg.data.v_plus);
    return WaveAnsatz(model, data, cfg.mu);
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path.string());
    return os;
}

int cmd_classify(const ExperimentConfig& cfg) {
    const StressModel model = StressModel::make(cfg.stress.a, cfg.stress.b, cfg.stress.k);
    const CaseLabel label = classify(model, cfg.data.v_minus, cfg.data.v_plus);
    std::cout << to_string(label) << "\n";
    if (label == CaseLabel::Case1) {
        const FarFieldData d = build_case1(model, cfg.data.v_minus, cfg.data.v_plus);
        std::cout << "u_minus = " << format_double(d.u_minus) << "\n"
                  << "u_a = " << format_double(d.u_a) << "\n"
                  << "u_plus = " << format_double(d.u_plus) << "\n"
                  << "delta = " << format_double(d.delta) << "\n";
    }
    return 0;
}

int cmd_profile(const ExperimentConfig& cfg, double t) {
    const WaveAnsatz ansatz = make_ansatz(cfg);
    const Grid grid = Grid::make(cfg.grid.x_left, cfg.grid.x_right, cfg.grid.n);
    fs::create_directories(cfg.output_dir);
    const fs::path path = fs::path(cfg.output_dir) /
                          ("profile_t" + format_double(t) + ".csv");
    auto os = open_output(path);
    write_profile_csv(os, ansatz, grid, t);
    std::cout << "wrote " << path.string() << "\n";
    return 0;
}

int cmd_verify(const ExperimentConfig& cfg) {
    const VerifyReport report = run_verification(cfg);
    std::cout << report.to_text();
    fs::create_directories(cfg.output_dir);
    open_output(fs::path(cfg.output_dir) / "verify_report.txt") << report.to_text();
    if (!report.curve_samples.empty()) {
        auto os = open_output(fs::path(cfg.output_dir) / "interaction_curves.csv");
        write_interaction_csv(os, report.curve_samples);
    }
    if (!report.all_passed()) {
        std::cerr << "verification failed: " << report.first_failure()->name << "\n";
        return 3;
    }
    return 0;
}

int cmd_simulate(const ExperimentConfig& cfg) {
    const WaveAnsatz ansatz = make_ansatz(cfg);
    const Grid grid = Grid::make(cfg.grid.x_left, cfg.grid.x_right, cfg.grid.n);
    const PerturbationSpec pert{cfg.perturbation.amplitude, cfg.perturbation.center,
                                cfg.perturbation.radius};
    SolverState state = initial_data(ansatz, grid, pert);
    SolverConfig scfg;
    scfg.cfl = cfg.solver.cfl;
    scfg.mu = cfg.mu;
    scfg.T = cfg.solver.T;
    scfg.snapshot_dt = cfg.solver.snapshot_dt;

    // Warn when the domain is too small for the ansatz to stay far-field at
    // the boundaries up to T.
    const double s_T = std::sqrt(2.0 * cfg.mu * (1.0 + scfg.T));
    const double need_right =
        lambda2(ansatz.model, ansatz.data.v_plus) * (1.0 + scfg.T) + 20.0 * s_T;
    if (cfg.grid.x_right < need_right || cfg.grid.x_left > -20.0 * s_T)
        std::cerr << "warning: domain [" << cfg.grid.x_left << ", " << cfg.grid.x_right
                  << "] is tight for T = " << scfg.T << " (suggest x_right >= "
                  << need_right << ", x_left <= " << -20.0 * s_T << ")\n";

    fs::create_directories(cfg.output_dir);
    DiagnosticsCollector collector(ansatz);
    int snapshot_index = 0;
    Observer snapshot_writer = [&](const SolverState& s) {
        const fs::path path = fs::path(cfg.output_dir) /
                              ("snapshot_" + std::to_string(snapshot_index++) + ".csv");
        auto os = open_output(path);
        write_snapshot_csv(os, s, ansatz);
    };
    Observer collect = [&](const SolverState& s) { collector(s); };

    RunSummary summary;
    try {
        summary = run(std::move(state), scfg, ansatz, {collect, snapshot_writer});
    } catch (const BlowUpError& e) {
        std::cerr << "blow-up: " << e.what() << "\n";
        return 4;
    }

    {
        auto os = open_output(fs::path(cfg.output_dir) / "diagnostics.csv");
        write_diagnostics_csv(os, collector.records());
    }
    {
        // initial CFL-limited time step (it adapts to max lambda2 as the run
        // proceeds)
        double lam_max = 0.0;
        for (int i = 0; i < grid.n; ++i)
            lam_max = std::max(lam_max,
                               lambda2(ansatz.model, ansatz.value(grid.x(i), 0.0).first));
        const double dt0 = scfg.cfl * std::min(grid.h() / lam_max,
                                               grid.h() * grid.h() / (2.0 * cfg.mu));
        auto os = open_output(fs::path(cfg.output_dir) / "run_meta.txt");
        os << "grid.n = " << grid.n << "\n"
           << "grid.h = " << format_double(grid.h()) << "\n"
           << "dt = " << format_double(dt0) << "\n"
           << "cfl = " << format_double(scfg.cfl) << "\n"
           << "T = " << format_double(scfg.T) << "\n"
           << "snapshot_dt = " << format_double(scfg.snapshot_dt) << "\n"
           << "steps = " << summary.steps << "\n"
           << "seed = " << cfg.seed << "\n"
           << "delta = " << format_double(ansatz.data.delta) << "\n";
        const auto& recs = collector.records();
        if (!recs.empty()) {
            const double h1_0 = std::hypot(recs.front().h1_phi, recs.front().h1_psi);
            os << "initial_h1 = " << format_double(h1_0) << "\n"
               << "smallness_delta_plus_h1 = "
               << format_double(ansatz.data.delta + h1_0) << "\n";
        }
        if (collector.cadence_warning())
            os << "warning = snapshot cadence exceeds 1 time unit\n";
    }

    const auto& recs = collector.records();
    if (recs.size() >= 2) {
        const double sup0 = recs.front().sup_phi + recs.front().sup_psi;
        const double supT = recs.back().sup_phi + recs.back().sup_psi;
        std::cout << "sup |(phi,psi)|: initial " << format_double(sup0) << ", final "
                  << format_double(supT);
        if (sup0 > 0.0) std::cout << " (ratio " << format_double(supT / sup0) << ")";
        std::cout << "\n";

        // decay-fit report over the run window for the monitored series
        auto os = open_output(fs::path(cfg.output_dir) / "fit_report.txt");
        std::vector<double> ts;
        for (const auto& r : recs) ts.push_back(r.t);
        const auto report_fit = [&](const char* name, const std::vector<double>& series) {
            try {
                const DecayFit fit = fit_decay(ts, series, ts.front() + 1.0, ts.back());
                os << name << ".exponent = " << format_double(fit.exponent) << "\n"
                   << name << ".constant = " << format_double(fit.constant) << "\n"
                   << name << ".residual = " << format_double(fit.residual) << "\n";
                return fit.exponent;
            } catch (const std::exception& e) {
                os << name << ".status = not fitted (" << e.what() << ")\n";
                return std::numeric_limits<double>::quiet_NaN();
            }
        };
        std::vector<double> sups, h_l1s, h_linfs;
        for (const auto& r : recs) {
            sups.push_back(r.sup_phi + r.sup_psi);
            h_l1s.push_back(r.h_l1);
            h_linfs.push_back(r.h_linf);
        }
        const double sup_exp = report_fit("sup_perturbation", sups);
        report_fit("h_l1", h_l1s);
        report_fit("h_linf", h_linfs);
        if (std::isfinite(sup_exp))
            std::cout << "fitted sup-norm trend: (1+t)^" << format_double(sup_exp) << "\n";
    }
    std::cout << "wrote " << (fs::path(cfg.output_dir) / "diagnostics.csv").string()
              << " and " << snapshot_index << " snapshots\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"composite-wave laboratory for 1D viscoelasticity with non-convex stress"};
    app.require_subcommand(1);

    CommonOpts opts;
    double profile_t = 0.0;
    app.add_option("--config", opts.config_path, "experiment config file (key = value)");
    app.add_option("--set", opts.overrides, "override a config field, e.g. --set mu=0.25");

    CLI::App* classify_cmd = app.add_subcommand("classify", "label the far-field data");
    CLI::App* profile_cmd =
        app.add_subcommand("profile", "write the ansatz snapshot CSV at time t");
    profile_cmd->add_option("--t", profile_t, "snapshot time (default 0)");
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the verification battery");
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "run the viscous solver with diagnostics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const ExperimentConfig cfg = load_config(opts);
        if (classify_cmd->parsed()) return cmd_classify(cfg);
        if (profile_cmd->parsed()) return cmd_profile(cfg, profile_t);
        if (verify_cmd->parsed()) return cmd_verify(cfg);
        if (simulate_cmd->parsed()) return cmd_simulate(cfg);
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const ClassificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BlowUpError& e) {
        std::cerr << "blow-up: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
