#pragma once

#include <optional>
#include <vector>

#include "compwave/interaction.hpp"
#include "compwave/solver.hpp"
#include "compwave/waves.hpp"

namespace compwave {

/// Per-snapshot functionals of the perturbation (phi, psi) = (v - v^, u - u^)
/// and of the ansatz sources. x1/z1 are NaN when root-finding was skipped or
/// failed at that time.
struct DiagnosticsRecord {
    double t = 0.0;
    double l2_phi = 0.0, l2_psi = 0.0;
    double h1_phi = 0.0, h1_psi = 0.0;
    double sup_phi = 0.0, sup_psi = 0.0;
    double g_increment = 0.0;
    double weighted_l2 = 0.0;
    double h_l1 = 0.0, h_linf = 0.0;
    double x1 = 0.0, z1 = 0.0;
};

struct PerturbationNorms {
    double l2_phi = 0.0, l2_psi = 0.0;
    double h1_phi = 0.0, h1_psi = 0.0;
    double sup_phi = 0.0, sup_psi = 0.0;
};

/// Nodal phi/psi against the ansatz at state.t; L2 by trapezoid, H1 adds the
/// centered-difference derivative, sup by max.
PerturbationNorms perturbation_norms(const SolverState& state, const WaveAnsatz& ansatz);

/// Spatial increment of the region-split functional G at time state.t:
///   -int_{v>a, v^>a} u^1x phi^2
///   -int_{v>a, -a<v^<=a} u^1x (phi + v^ - a)^2
///   -int_{-a<v<=a, v^>a} u^1x (a - v^)^2        (v = v^ + phi)
/// with u^1x = u^r_x - sqrt(b) Xi2_x < 0, so every increment is >= 0.
double g_increment(const SolverState& state, const WaveAnsatz& ansatz);

/// int w^2 (phi^2 + psi^2) dx with the heat-kernel weight
/// w = exp(-(x - sqrt(b) t)^2 / (2 mu (1+t))) / sqrt(2 mu (1+t)).
double weighted_norm(const SolverState& state, const WaveAnsatz& ansatz);

/// Trapezoid-in-time accumulation of g_increment over a snapshot series.
std::vector<double> g_functional(const std::vector<DiagnosticsRecord>& records);

struct HNorms {
    double l1 = 0.0;
    double linf = 0.0;
    double l2 = 0.0;
    bool quadrature_converged = true;
};

/// L1 (adaptive quadrature), Linf (dense sampling) and L2 of the source H
/// over a window covering the contact core and the whole fan.
HNorms h_norms(const WaveAnsatz& ansatz, double t);

struct DecayFit {
    double exponent = 0.0;   ///< least-squares slope of log value vs log(1+t)
    double constant = 0.0;   ///< exp(intercept)
    double residual = 0.0;   ///< rms of the log-log fit residual
    int n_samples = 0;
    double t_first = 0.0, t_last = 0.0;
};

/// Fit value ~ C (1+t)^p over the samples with t in [t_lo, t_hi]. Requires
/// positive values, at least 8 samples in the window spanning a decade.
DecayFit fit_decay(const std::vector<double>& t, const std::vector<double>& value,
                   double t_lo, double t_hi);

/// Snapshot observer that assembles DiagnosticsRecords during a run. The
/// interaction curves and H norms are optional (they dominate the cost).
class DiagnosticsCollector {
public:
    DiagnosticsCollector(const WaveAnsatz& ansatz, bool with_curves = true,
                         bool with_h_norms = true)
        : ansatz_(&ansatz), with_curves_(with_curves), with_h_norms_(with_h_norms),
          curves_(ansatz) {}

    void operator()(const SolverState& state);

    const std::vector<DiagnosticsRecord>& records() const { return records_; }
    std::vector<double> g_series() const { return g_functional(records_); }

    /// Running sup of the H1 norm sqrt(h1_phi^2 + h1_psi^2) up to each snapshot.
    std::vector<double> n_series() const;

    bool cadence_warning() const { return cadence_warning_; }

private:
    const WaveAnsatz* ansatz_;
    bool with_curves_;
    bool with_h_norms_;
    InteractionCurves curves_;
    std::vector<DiagnosticsRecord> records_;
    bool cadence_warning_ = false;
};

}  // namespace compwave
