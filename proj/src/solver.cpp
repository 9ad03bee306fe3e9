#include "compwave/solver.hpp"

#include <cmath>
#include <limits>

namespace compwave {

double bump(const PerturbationSpec& p, double x) {
    const double s = (x - p.center) / p.radius;
    const double d = s * s - 1.0;
    if (d >= 0.0) return 0.0;
    return p.amplitude * std::exp(1.0 / d);
}

SolverState initial_data(const WaveAnsatz& ansatz, const Grid& grid,
                         const PerturbationSpec& perturbation) {
    const double margin = 0.1 * (grid.x_right - grid.x_left);
    if (perturbation.amplitude != 0.0) {
        if (perturbation.center - perturbation.radius < grid.x_left + margin ||
            perturbation.center + perturbation.radius > grid.x_right - margin)
            throw std::invalid_argument(
                "initial_data: perturbation support must sit inside the grid "
                "with a 10% margin");
    }
    SolverState st;
    st.t = 0.0;
    st.grid = grid;
    st.v.resize(grid.n);
    st.u.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const auto [vh, uh] = ansatz.value(x, 0.0);
        const double p = bump(perturbation, x);
        st.v[i] = vh + p;
        st.u[i] = uh + p;
    }
    return st;
}

RK4Stepper::RK4Stepper(const StressModel& model, const SolverConfig& config,
                       BoundaryFn boundary)
    : model_(model), config_(config), boundary_(std::move(boundary)) {}

namespace {

inline void eval_rhs(const StressModel& model, double mu, double h,
                     const std::vector<double>& v, const std::vector<double>& u,
                     std::vector<double>& sig, std::vector<double>& dv,
                     std::vector<double>& du) {
    const int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) sig[i] = sigma(model, v[i]);
    const double inv2h = 1.0 / (2.0 * h);
    const double invh2 = 1.0 / (h * h);
    dv[0] = du[0] = dv[n - 1] = du[n - 1] = 0.0;
    for (int i = 1; i < n - 1; ++i) {
        dv[i] = (u[i + 1] - u[i - 1]) * inv2h;
        du[i] = (sig[i + 1] - sig[i - 1]) * inv2h +
                mu * (u[i + 1] - 2.0 * u[i] + u[i - 1]) * invh2;
    }
}

}  // namespace

double RK4Stepper::step(SolverState& state, double dt_max) {
    const int n = state.grid.n;
    const double h = state.grid.h();
    const double t0 = state.t;

    double lam_max = 0.0;
    for (double v : state.v) {
        const double l = sigma_prime(model_, v);
        if (!(l >= 0.0) || !std::isfinite(l)) throw BlowUpError(t0);
        lam_max = std::max(lam_max, l);
    }
    lam_max = std::sqrt(lam_max);
    double dt = config_.cfl * h / std::max(lam_max, 1e-300);
    if (config_.mu > 0.0)
        dt = std::min(dt, config_.cfl * h * h / (2.0 * config_.mu));
    dt = std::min(dt, dt_max);
    if (!(dt > 0.0)) return 0.0;

    sig_.resize(n);
    vs_.resize(n);
    us_.resize(n);
    for (auto* k : {&kv_[0], &kv_[1], &kv_[2], &kv_[3], &ku_[0], &ku_[1], &ku_[2], &ku_[3]})
        k->resize(n);

    static constexpr double stage_c[4] = {0.0, 0.5, 0.5, 1.0};
    const double xl = state.grid.x_left;
    const double xr = state.grid.x_right;

    double flux = 0.0;
    for (int s = 0; s < 4; ++s) {
        const double ts = t0 + stage_c[s] * dt;
        if (s == 0) {
            vs_ = state.v;
            us_ = state.u;
        } else {
            const double c = stage_c[s] * dt;
            const auto& pv = kv_[s - 1];
            const auto& pu = ku_[s - 1];
            for (int i = 0; i < n; ++i) {
                vs_[i] = state.v[i] + c * pv[i];
                us_[i] = state.u[i] + c * pu[i];
            }
        }
        const auto [vl, ul] = boundary_(xl, ts);
        const auto [vr, ur] = boundary_(xr, ts);
        vs_[0] = vl;
        us_[0] = ul;
        vs_[n - 1] = vr;
        us_[n - 1] = ur;
        eval_rhs(model_, config_.mu, h, vs_, us_, sig_, kv_[s], ku_[s]);
        const double w = (s == 0 || s == 3) ? 1.0 / 6.0 : 1.0 / 3.0;
        flux += w * (ur - ul);
    }

    for (int i = 1; i < n - 1; ++i) {
        state.v[i] += dt / 6.0 * (kv_[0][i] + 2.0 * kv_[1][i] + 2.0 * kv_[2][i] + kv_[3][i]);
        state.u[i] += dt / 6.0 * (ku_[0][i] + 2.0 * ku_[1][i] + 2.0 * ku_[2][i] + ku_[3][i]);
    }
    state.t = t0 + dt;
    const auto [vl, ul] = boundary_(xl, state.t);
    const auto [vr, ur] = boundary_(xr, state.t);
    state.v[0] = vl;
    state.u[0] = ul;
    state.v[n - 1] = vr;
    state.u[n - 1] = ur;
    flux_integral_ += dt * flux;

    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(state.v[i]) || !std::isfinite(state.u[i]) ||
            std::abs(state.v[i]) > 1e8 || std::abs(state.u[i]) > 1e8)
            throw BlowUpError(t0);
    }
    return dt;
}

double step(SolverState& state, const SolverConfig& config, const WaveAnsatz& ansatz) {
    RK4Stepper stepper(ansatz.model, config,
                       [&ansatz](double x, double t) { return ansatz.value(x, t); });
    return stepper.step(state, std::numeric_limits<double>::infinity());
}

RunSummary run_with_boundary(SolverState state, const SolverConfig& config,
                             const StressModel& model, const BoundaryFn& boundary,
                             const std::vector<Observer>& observers) {
    RK4Stepper stepper(model, config, boundary);
    RunSummary out;
    const auto notify = [&](const SolverState& s) {
        for (const auto& obs : observers)
            if (obs) obs(s);
    };
    notify(state);
    const double T = config.T;
    const double cadence = config.snapshot_dt > 0.0 ? config.snapshot_dt : T;
    long snap = 1;
    while (state.t < T - 1e-12 * (1.0 + T)) {
        double target = std::min(T, snap * cadence);
        if (target <= state.t + 1e-12 * (1.0 + state.t)) {
            ++snap;
            continue;
        }
        const double dt = stepper.step(state, target - state.t);
        ++out.steps;
        if (dt == 0.0) break;
        if (state.t >= target - 1e-12 * (1.0 + target)) {
            state.t = target;  // land exactly on the snapshot time
            notify(state);
            ++snap;
        }
    }
    out.boundary_flux_integral = stepper.boundary_flux_integral();
    out.final_state = std::move(state);
    return out;
}

RunSummary run(SolverState state, const SolverConfig& config, const WaveAnsatz& ansatz,
               const std::vector<Observer>& observers) {
    return run_with_boundary(std::move(state), config, ansatz.model,
                             [&ansatz](double x, double t) { return ansatz.value(x, t); },
                             observers);
}

}  // namespace compwave
