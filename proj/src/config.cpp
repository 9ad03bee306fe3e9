#include "compwave/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace compwave {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

using Setter = std::function<void(ExperimentConfig&, const std::string&, int line)>;

double parse_double(const std::string& key, const std::string& value, int line) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        if (!std::isfinite(d)) throw std::invalid_argument("not finite");
        return d;
    } catch (const std::exception&) {
        throw ConfigError(line, key, "config line " + std::to_string(line) + ": field '" +
                                         key + "': invalid number '" + value + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value, int line) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(line, key, "config line " + std::to_string(line) + ": field '" +
                                         key + "': invalid integer '" + value + "'");
    }
}

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"stress.a", [](ExperimentConfig& c, const std::string& v, int l) { c.stress.a = parse_double("stress.a", v, l); }},
        {"stress.b", [](ExperimentConfig& c, const std::string& v, int l) { c.stress.b = parse_double("stress.b", v, l); }},
        {"stress.k", [](ExperimentConfig& c, const std::string& v, int l) { c.stress.k = parse_double("stress.k", v, l); }},
        {"data.v_minus", [](ExperimentConfig& c, const std::string& v, int l) { c.data.v_minus = parse_double("data.v_minus", v, l); }},
        {"data.v_plus", [](ExperimentConfig& c, const std::string& v, int l) { c.data.v_plus = parse_double("data.v_plus", v, l); }},
        {"mu", [](ExperimentConfig& c, const std::string& v, int l) { c.mu = parse_double("mu", v, l); }},
        {"grid.x_left", [](ExperimentConfig& c, const std::string& v, int l) { c.grid.x_left = parse_double("grid.x_left", v, l); }},
        {"grid.x_right", [](ExperimentConfig& c, const std::string& v, int l) { c.grid.x_right = parse_double("grid.x_right", v, l); }},
        {"grid.n", [](ExperimentConfig& c, const std::string& v, int l) { c.grid.n = static_cast<int>(parse_int("grid.n", v, l)); }},
        {"solver.cfl", [](ExperimentConfig& c, const std::string& v, int l) { c.solver.cfl = parse_double("solver.cfl", v, l); }},
        {"solver.T", [](ExperimentConfig& c, const std::string& v, int l) { c.solver.T = parse_double("solver.T", v, l); }},
        {"solver.snapshot_dt", [](ExperimentConfig& c, const std::string& v, int l) { c.solver.snapshot_dt = parse_double("solver.snapshot_dt", v, l); }},
        {"perturbation.amplitude", [](ExperimentConfig& c, const std::string& v, int l) { c.perturbation.amplitude = parse_double("perturbation.amplitude", v, l); }},
        {"perturbation.center", [](ExperimentConfig& c, const std::string& v, int l) { c.perturbation.center = parse_double("perturbation.center", v, l); }},
        {"perturbation.radius", [](ExperimentConfig& c, const std::string& v, int l) { c.perturbation.radius = parse_double("perturbation.radius", v, l); }},
        {"verification.eps", [](ExperimentConfig& c, const std::string& v, int l) { c.verification.eps = parse_double("verification.eps", v, l); }},
        {"verification.beta", [](ExperimentConfig& c, const std::string& v, int l) { c.verification.beta = parse_double("verification.beta", v, l); }},
        {"verification.t_samples", [](ExperimentConfig& c, const std::string& v, int l) { c.verification.t_samples = static_cast<int>(parse_int("verification.t_samples", v, l)); }},
        {"output_dir", [](ExperimentConfig& c, const std::string& v, int l) {
             if (v.empty()) throw ConfigError(l, "output_dir", "output_dir must not be empty");
             c.output_dir = v;
         }},
        {"seed", [](ExperimentConfig& c, const std::string& v, int l) { c.seed = static_cast<std::uint64_t>(parse_int("seed", v, l)); }},
    };
    return table;
}

void apply_key(ExperimentConfig& cfg, const std::string& key, const std::string& value,
               int line) {
    const auto it = setters().find(key);
    if (it == setters().end())
        throw ConfigError(line, key, "config line " + std::to_string(line) +
                                         ": unknown field '" + key + "'");
    it->second(cfg, value, line);
}

}  // namespace

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError(0, "", "cannot open config file: " + path);
    ExperimentConfig cfg;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line, "", "config line " + std::to_string(line) +
                                            ": expected 'key = value', got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty())
            throw ConfigError(line, "", "config line " + std::to_string(line) +
                                            ": empty key");
        apply_key(cfg, key, value, line);
    }
    return cfg;
}

void apply_override(ExperimentConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError(0, "", "override must be key=value, got '" + assignment + "'");
    apply_key(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)), 0);
}

void validate(const ExperimentConfig& cfg) {
    const auto require = [](bool ok, const std::string& field, const std::string& msg) {
        if (!ok) throw ConfigError(0, field, "config field '" + field + "': " + msg);
    };
    require(cfg.stress.a > 0.0, "stress.a", "must be positive");
    require(cfg.stress.b > 0.0, "stress.b", "must be positive");
    require(cfg.stress.k > 0.0, "stress.k", "must be positive");
    require(cfg.mu > 0.0, "mu", "must be positive");
    require(cfg.data.v_minus < cfg.data.v_plus, "data.v_minus", "requires v_minus < v_plus");
    require(cfg.grid.n >= 16, "grid.n", "need at least 16 nodes");
    require(cfg.grid.x_right > cfg.grid.x_left, "grid.x_right", "empty domain");
    require(cfg.solver.cfl > 0.0 && cfg.solver.cfl <= 0.9, "solver.cfl",
            "must be in (0, 0.9]");
    require(cfg.solver.T >= 0.0, "solver.T", "must be nonnegative");
    require(cfg.solver.snapshot_dt > 0.0, "solver.snapshot_dt", "must be positive");
    require(cfg.perturbation.radius > 0.0, "perturbation.radius", "must be positive");
    require(cfg.verification.eps > 0.0 && cfg.verification.eps < 1.0, "verification.eps",
            "must be in (0, 1)");
    require(cfg.verification.beta > 0.0, "verification.beta", "must be positive");
    require(cfg.verification.t_samples >= 16, "verification.t_samples", "need >= 16");
}

std::string to_text(const ExperimentConfig& c) {
    std::ostringstream os;
    os << "stress.a = " << c.stress.a << "\n"
       << "stress.b = " << c.stress.b << "\n"
       << "stress.k = " << c.stress.k << "\n"
       << "data.v_minus = " << c.data.v_minus << "\n"
       << "data.v_plus = " << c.data.v_plus << "\n"
       << "mu = " << c.mu << "\n"
       << "grid.x_left = " << c.grid.x_left << "\n"
       << "grid.x_right = " << c.grid.x_right << "\n"
       << "grid.n = " << c.grid.n << "\n"
       << "solver.cfl = " << c.solver.cfl << "\n"
       << "solver.T = " << c.solver.T << "\n"
       << "solver.snapshot_dt = " << c.solver.snapshot_dt << "\n"
       << "perturbation.amplitude = " << c.perturbation.amplitude << "\n"
       << "perturbation.center = " << c.perturbation.center << "\n"
       << "perturbation.radius = " << c.perturbation.radius << "\n"
       << "verification.eps = " << c.verification.eps << "\n"
       << "verification.beta = " << c.verification.beta << "\n"
       << "verification.t_samples = " << c.verification.t_samples << "\n"
       << "output_dir = " << c.output_dir << "\n"
       << "seed = " << c.seed << "\n";
    return os.str();
}

}  // namespace compwave
