#pragma once

#include <string>
#include <vector>

#include "compwave/waves.hpp"

namespace compwave {

/// One sampled point of the interaction curves, with the slacks of the
/// two-sided X1 bounds and the Z1 lower bound.
struct CurveSample {
    double t = 0.0;
    double x1 = 0.0;
    double z1 = 0.0;
    double y1 = 0.0;              ///< (X1 - sqrt(b)(1+t)) / sqrt(2 mu (1+t))
    double x1_lower_slack = 0.0;  ///< X1 - sqrt(b)(1+t) - sqrt(2 mu (1+t))
    double x1_upper_slack = 0.0;  ///< lambda2(v+)(1+t) - X1
    double y1_sq_upper_slack = 0.0;  ///< Y1^2 - (1/2) ln(1+t)
    double y1_sq_lower_slack = 0.0;  ///< Y1^2 - ln(1+t) / (2 (1+eps))
    double z1_lower_slack = 0.0;     ///< Z1 - sqrt(b) t - sqrt(beta ln(1+t)) sqrt(2 mu (1+t))
};

struct T0Result {
    bool found = false;
    double t0 = 0.0;
    std::string reason;           ///< set when detection fails
    std::vector<CurveSample> samples;
};

struct SlackReport {
    double t = 0.0;
    double y1 = 0.0;
    double upper_slack = 0.0;
    double lower_slack = 0.0;
};

/// Locator for the wave-interaction curves X1(t) and Z1(t), the level sets of
/// the monotone function v^1 = Xi2 + v^r - a. Both roots are found by
/// bisection on a bracket spanning the contact path and the fan.
class InteractionCurves {
public:
    InteractionCurves(const WaveAnsatz& ansatz, double beta = 0.25, double eps = 0.25)
        : ansatz_(&ansatz), beta_(beta), eps_(eps) {}

    /// Unique x with v^1(x, t) = a. Throws RootBracketError if the defining
    /// function has no sign change on the bracket (degenerate amplitude).
    double find_x1(double t) const;

    /// Unique x with v^1(x, t) = a - (mu/(4 sqrt(b)))(a - v-)/(sqrt(pi) sqrt(2 mu (1+t))).
    double find_z1(double t) const;

    /// Right-hand side of the Z1 level equation at time t.
    double z1_level(double t) const;

    /// Solve both curves at t and compute bound slacks.
    CurveSample sample(double t) const;

    SlackReport slack_report(double t, double eps) const;

    const WaveAnsatz& ansatz() const { return *ansatz_; }
    double beta() const { return beta_; }
    double eps() const { return eps_; }

    const std::vector<CurveSample>& cached_samples() const { return cache_; }

private:
    std::pair<double, double> bracket(double t) const;
    double solve_level(double t, double level) const;

    const WaveAnsatz* ansatz_;
    double beta_;
    double eps_;
    mutable std::vector<CurveSample> cache_;
};

/// Scan a log grid of times in [t_min, t_max] and return the smallest grid
/// time from which the two-sided X1 bounds and the Z1 lower bound hold at
/// every later sample. On failure, `reason` names the first obstruction.
T0Result detect_t0(const InteractionCurves& curves, double t_min = 1.0,
                   double t_max = 1e4, int samples = 50);

/// sqrt(beta ln(1+t)) sqrt(2 mu (1+t)) + sqrt(b) t, the Z1 lower-bound locus.
double z1_lower_locus(const WaveAnsatz& ansatz, double beta, double t);

/// Log-spaced sample times, endpoints included.
std::vector<double> log_spaced(double t_min, double t_max, int n);

}  // namespace compwave
