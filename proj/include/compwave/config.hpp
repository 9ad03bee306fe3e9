#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace compwave {

struct ConfigError : std::runtime_error {
    int line;          ///< 1-based line number, 0 when not tied to a line
    std::string field;
    ConfigError(int line_, std::string field_, const std::string& msg)
        : std::runtime_error(msg), line(line_), field(std::move(field_)) {}
};

/// Flat experiment configuration, read from a line-oriented "key = value"
/// file with dotted keys (e.g. stress.a). Unknown keys and malformed lines
/// are errors; '#' starts a comment.
struct ExperimentConfig {
    struct { double a = 1.0, b = 1.0, k = 0.5; } stress;
    struct { double v_minus = 0.0, v_plus = 2.0; } data;
    double mu = 0.5;
    struct { double x_left = -150.0, x_right = 300.0; int n = 4501; } grid;
    struct { double cfl = 0.4, T = 20.0, snapshot_dt = 1.0; } solver;
    struct { double amplitude = 0.1, center = 0.0, radius = 2.0; } perturbation;
    struct { double eps = 0.25, beta = 0.25; int t_samples = 50; } verification;
    std::string output_dir = "out";
    std::uint64_t seed = 1;
};

/// Parse a config file. Throws ConfigError with line/field information.
ExperimentConfig parse_config_file(const std::string& path);

/// Apply one "key=value" override to an existing config.
void apply_override(ExperimentConfig& cfg, const std::string& assignment);

/// Range/positivity validation. Throws ConfigError naming the field.
void validate(const ExperimentConfig& cfg);

/// Serialize back to the config file format (defaults included).
std::string to_text(const ExperimentConfig& cfg);

}  // namespace compwave
