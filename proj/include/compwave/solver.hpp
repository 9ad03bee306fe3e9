#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compwave/waves.hpp"

namespace compwave {

struct Grid {
    double x_left = 0.0;
    double x_right = 0.0;
    int n = 0;

    static Grid make(double x_left, double x_right, int n) {
        if (n < 16) throw std::invalid_argument("Grid: need at least 16 nodes");
        if (!(x_right > x_left)) throw std::invalid_argument("Grid: empty domain");
        return Grid{x_left, x_right, n};
    }

    double h() const { return (x_right - x_left) / (n - 1); }
    double x(int i) const { return x_left + i * h(); }
};

struct SolverState {
    double t = 0.0;
    std::vector<double> v;
    std::vector<double> u;
    Grid grid;
};

struct SolverConfig {
    double cfl = 0.4;
    double mu = 0.5;
    double T = 0.0;
    double snapshot_dt = 1.0;
};

/// C-infinity bump A exp(1 / ((x-c)^2/r^2 - 1)) on |x - c| < r, zero outside.
struct PerturbationSpec {
    double amplitude = 0.0;
    double center = 0.0;
    double radius = 1.0;
};

double bump(const PerturbationSpec& p, double x);

struct BlowUpError : std::runtime_error {
    double last_valid_time;
    explicit BlowUpError(double t)
        : std::runtime_error("solution blew up; last valid time t = " + std::to_string(t)),
          last_valid_time(t) {}
};

/// Dirichlet boundary values as a function of (x, t).
using BoundaryFn = std::function<std::pair<double, double>(double, double)>;

/// Ansatz snapshot plus the bump perturbation on both fields. The bump support
/// must sit inside the grid with a margin of at least 10% of the domain width.
SolverState initial_data(const WaveAnsatz& ansatz, const Grid& grid,
                         const PerturbationSpec& perturbation);

/// One explicit RK4 step of the method-of-lines system
///   dv/dt = D_x u,   du/dt = D_x sigma(v) + mu D_xx u
/// with second-order centered differences. Boundary nodes are pinned to the
/// boundary function at the stage times. dt = cfl * min(h / max lambda2(v),
/// h^2 / (2 mu)), capped by dt_max. Returns the dt taken.
class RK4Stepper {
public:
    RK4Stepper(const StressModel& model, const SolverConfig& config, BoundaryFn boundary);

    double step(SolverState& state, double dt_max);

    /// Time integral of u(x_right, t) - u(x_left, t) accumulated with the RK4
    /// quadrature weights (the boundary flux of the mass equation).
    double boundary_flux_integral() const { return flux_integral_; }

private:
    StressModel model_;
    SolverConfig config_;
    BoundaryFn boundary_;
    double flux_integral_ = 0.0;
    mutable std::vector<double> sig_;
    std::vector<double> vs_, us_, kv_[4], ku_[4];
};

/// Convenience single step with ansatz-coupled boundaries.
double step(SolverState& state, const SolverConfig& config, const WaveAnsatz& ansatz);

using Observer = std::function<void(const SolverState&)>;

struct RunSummary {
    SolverState final_state;
    long steps = 0;
    double boundary_flux_integral = 0.0;
};

/// Advance to config.T, invoking the observers at t = 0, every snapshot_dt,
/// and at T. Steps land exactly on snapshot times. Blow-up propagates.
RunSummary run(SolverState state, const SolverConfig& config, const WaveAnsatz& ansatz,
               const std::vector<Observer>& observers);

/// Same, with an arbitrary boundary function (used by equilibrium tests).
RunSummary run_with_boundary(SolverState state, const SolverConfig& config,
                             const StressModel& model, const BoundaryFn& boundary,
                             const std::vector<Observer>& observers);

}  // namespace compwave
