#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "compwave/config.hpp"
#include "compwave/diagnostics.hpp"
#include "compwave/interaction.hpp"
#include "compwave/waves.hpp"

namespace compwave {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<CurveSample> curve_samples;  ///< for the interaction CSV export
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
    std::string to_text() const;
};

/// Analytic identity checks at seeded sample points.
CheckResult check_heat_identity(const WaveAnsatz& ansatz, std::uint64_t seed,
                                int points = 1000, double tol = 1e-12);
CheckResult check_contact_residual_q1(const WaveAnsatz& ansatz, std::uint64_t seed,
                                      int points = 1000, double tol = 1e-12);
CheckResult check_contact_residual_q2(const WaveAnsatz& ansatz, std::uint64_t seed,
                                      int points = 1000, double tol = 1e-10);

/// Order-2 self-convergence of the finite-difference residual of the
/// rarefaction system, over fd steps {1e-2, 5e-3, 2.5e-3}.
CheckResult check_rarefaction_fd_order(const WaveAnsatz& ansatz, std::uint64_t seed,
                                       int points = 60);

/// Monotonicity/sign battery for the rarefaction profile.
CheckResult check_rarefaction_signs(const WaveAnsatz& ansatz, std::uint64_t seed,
                                    int points = 500);

struct EnvelopeSeries {
    std::vector<double> t;
    std::vector<double> value;  ///< already normalized
};

/// ||d/dx U^r(t)||_{L1} and ||d/dx U^r||_{Linf} (1+t), over log-spaced t.
EnvelopeSeries rarefaction_l1_series(const WaveAnsatz& ansatz, double t_lo, double t_hi,
                                     int samples);
EnvelopeSeries rarefaction_linf_series(const WaveAnsatz& ansatz, double t_lo, double t_hi,
                                       int samples);

/// Boundedness plus flat fitted slope of a normalized envelope series. The fit
/// runs on the asymptotic tail [fit_lo, inf) of the sample window.
CheckResult check_envelope_flat(const std::string& name, const EnvelopeSeries& series,
                                double fit_lo, double slope_tol, bool two_sided);

struct HSeries {
    std::vector<double> t;
    std::vector<double> l1, linf, l2;
};

HSeries h_series(const WaveAnsatz& ansatz, double t_lo, double t_hi, int samples);

/// Source-term envelopes: normalized h_l1 and h_linf slopes over [10, 1e3].
CheckResult check_h_l1_envelope(const HSeries& s, double eps, double slope_tol = 0.05);
CheckResult check_h_linf_envelope(const HSeries& s, double slope_tol = 0.05);
/// ||H||_2 <= sqrt(||H||_1 ||H||_inf) within relative margin at each sample.
CheckResult check_h_interpolation(const HSeries& s, double rel_margin = 1e-10);

struct InteractionBattery {
    T0Result t0;
    CheckResult detection;
    CheckResult x1_bounds;       ///< two-sided X1 window for t >= T0
    CheckResult z1_bounds;    ///< Z1 window for t >= T0
    CheckResult slack_trends;       ///< Y1 >= 1, slack trends
    CheckResult x1_consistency;  ///< fan-value vs Gaussian-tail defect trend at X1
};

InteractionBattery run_interaction_battery(const WaveAnsatz& ansatz, double beta,
                                           double eps, int t_samples, double t_min = 1.0,
                                           double t_max = 1e4);

/// The full battery behind `verify`: waves identities + interaction bounds +
/// H-envelope checks, built from the experiment configuration.
VerifyReport run_verification(const ExperimentConfig& cfg);

}  // namespace compwave
