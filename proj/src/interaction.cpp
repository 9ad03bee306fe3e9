#include "compwave/interaction.hpp"

#include <cmath>

#include "compwave/rootfind.hpp"

namespace compwave {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<double> log_spaced(double t_min, double t_max, int n) {
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(t_min);
        return out;
    }
    const double l0 = std::log(t_min);
    const double l1 = std::log(t_max);
    for (int i = 0; i < n; ++i)
        out.push_back(std::exp(l0 + (l1 - l0) * i / (n - 1)));
    return out;
}

std::pair<double, double> InteractionCurves::bracket(double t) const {
    const WaveAnsatz& a = *ansatz_;
    const double sb = a.model.sqrt_b();
    const double s = std::sqrt(2.0 * a.mu * (1.0 + t));
    const double lo = sb * (1.0 + t) - 10.0 * s;
    const double hi = lambda2(a.model, a.data.v_plus) * (1.0 + t) + 10.0 * s;
    return {lo, hi};
}

double InteractionCurves::solve_level(double t, double level) const {
    const auto [lo, hi] = bracket(t);
    const WaveAnsatz& a = *ansatz_;
    const auto f = [&](double x) { return a.v_hat1(x, t) - level; };
    // The level set only exists when the increasing defining function strictly
    // changes sign on the bracket. Degenerate amplitudes (v+ = a) leave the
    // function nonpositive everywhere, with the far tail rounding to zero.
    const double flo = f(lo);
    const double fhi = f(hi);
    if (!(flo < 0.0) || !(fhi > 0.0)) throw RootBracketError(lo, hi, flo, fhi);
    // Sample monotonicity before committing to bisection so a non-monotone
    // profile is caught loudly.
    const int probes = 9;
    double prev = flo;
    for (int i = 1; i <= probes; ++i) {
        const double x = lo + (hi - lo) * i / probes;
        const double cur = f(x);
        if (cur < prev - 1e-9 * (1.0 + std::abs(cur)))
            throw std::runtime_error("interaction: defining function not increasing in x");
        prev = cur;
    }
    const double xtol = 1e-10 * (1.0 + t);
    return bisect(f, lo, hi, xtol);
}

double InteractionCurves::z1_level(double t) const {
    const WaveAnsatz& a = *ansatz_;
    const double s = std::sqrt(2.0 * a.mu * (1.0 + t));
    const double amp = a.data.a - a.data.v_minus;
    return a.data.a - (a.mu / (4.0 * a.model.sqrt_b())) * amp / (std::sqrt(kPi) * s);
}

double InteractionCurves::find_x1(double t) const {
    if (!(t >= 0.0)) throw std::domain_error("find_x1: requires t >= 0");
    return solve_level(t, ansatz_->data.a);
}

double InteractionCurves::find_z1(double t) const {
    if (!(t >= 0.0)) throw std::domain_error("find_z1: requires t >= 0");
    return solve_level(t, z1_level(t));
}

double z1_lower_locus(const WaveAnsatz& ansatz, double beta, double t) {
    const double s = std::sqrt(2.0 * ansatz.mu * (1.0 + t));
    return ansatz.model.sqrt_b() * t + std::sqrt(beta * std::log1p(t)) * s;
}

CurveSample InteractionCurves::sample(double t) const {
    const WaveAnsatz& a = *ansatz_;
    CurveSample out;
    out.t = t;
    out.x1 = find_x1(t);
    out.z1 = find_z1(t);
    const double sb = a.model.sqrt_b();
    const double s = std::sqrt(2.0 * a.mu * (1.0 + t));
    out.y1 = (out.x1 - sb * (1.0 + t)) / s;
    out.x1_lower_slack = out.x1 - sb * (1.0 + t) - s;
    out.x1_upper_slack = lambda2(a.model, a.data.v_plus) * (1.0 + t) - out.x1;
    const double lt = std::log1p(t);
    out.y1_sq_upper_slack = out.y1 * out.y1 - 0.5 * lt;
    out.y1_sq_lower_slack = out.y1 * out.y1 - lt / (2.0 * (1.0 + eps_));
    out.z1_lower_slack = out.z1 - z1_lower_locus(a, beta_, t);
    cache_.push_back(out);
    return out;
}

SlackReport InteractionCurves::slack_report(double t, double eps) const {
    if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("slack_report: eps in (0,1)");
    const WaveAnsatz& a = *ansatz_;
    SlackReport r;
    r.t = t;
    const double x1 = find_x1(t);
    const double sb = a.model.sqrt_b();
    const double s = std::sqrt(2.0 * a.mu * (1.0 + t));
    r.y1 = (x1 - sb * (1.0 + t)) / s;
    const double lt = std::log1p(t);
    r.upper_slack = r.y1 * r.y1 - 0.5 * lt;
    r.lower_slack = r.y1 * r.y1 - lt / (2.0 * (1.0 + eps));
    return r;
}

T0Result detect_t0(const InteractionCurves& curves, double t_min, double t_max,
                   int samples) {
    T0Result out;
    const std::vector<double> grid = log_spaced(t_min, t_max, samples);
    out.samples.reserve(grid.size());
    for (double t : grid) {
        try {
            out.samples.push_back(curves.sample(t));
        } catch (const RootBracketError& e) {
            out.reason = "curve root not bracketed at t = " + std::to_string(t) +
                         " (" + e.what() + ")";
            return out;
        }
    }
    const auto holds = [](const CurveSample& s) {
        return s.x1_lower_slack >= 0.0 && s.x1_upper_slack >= 0.0 &&
               s.z1_lower_slack >= 0.0 && s.z1 <= s.x1;
    };
    // Smallest grid time from which every later sample satisfies the bounds.
    int first_ok = -1;
    for (int i = static_cast<int>(out.samples.size()) - 1; i >= 0; --i) {
        if (!holds(out.samples[i])) break;
        first_ok = i;
    }
    if (first_ok < 0) {
        const CurveSample& last = out.samples.back();
        out.reason = "bounds never hold within the scan grid; at t = " +
                     std::to_string(last.t) +
                     " slacks (x1_lower, x1_upper, z1_lower) = (" +
                     std::to_string(last.x1_lower_slack) + ", " +
                     std::to_string(last.x1_upper_slack) + ", " +
                     std::to_string(last.z1_lower_slack) + ")";
        return out;
    }
    out.found = true;
    out.t0 = grid[first_ok];
    return out;
}

}  // namespace compwave
