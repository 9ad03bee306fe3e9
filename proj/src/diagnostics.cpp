#include "compwave/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "compwave/quad.hpp"

namespace compwave {

namespace {

double trapezoid(const std::vector<double>& f, double h) {
    if (f.size() < 2) return 0.0;
    double acc = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += f[i];
    return acc * h;
}

// Centered first derivative, one-sided at the ends.
std::vector<double> derivative(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> d(n, 0.0);
    if (n < 2) return d;
    d[0] = (f[1] - f[0]) / h;
    d[n - 1] = (f[n - 1] - f[n - 2]) / h;
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    return d;
}

}  // namespace

PerturbationNorms perturbation_norms(const SolverState& state, const WaveAnsatz& ansatz) {
    const int n = state.grid.n;
    if (static_cast<int>(state.v.size()) != n || static_cast<int>(state.u.size()) != n)
        throw std::invalid_argument("perturbation_norms: state fields do not match grid");
    const double h = state.grid.h();
    std::vector<double> phi(n), psi(n), phi2(n), psi2(n);
    double sup_phi = 0.0, sup_psi = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto [vh, uh] = ansatz.value(state.grid.x(i), state.t);
        phi[i] = state.v[i] - vh;
        psi[i] = state.u[i] - uh;
        phi2[i] = phi[i] * phi[i];
        psi2[i] = psi[i] * psi[i];
        sup_phi = std::max(sup_phi, std::abs(phi[i]));
        sup_psi = std::max(sup_psi, std::abs(psi[i]));
    }
    PerturbationNorms out;
    out.sup_phi = sup_phi;
    out.sup_psi = sup_psi;
    out.l2_phi = std::sqrt(trapezoid(phi2, h));
    out.l2_psi = std::sqrt(trapezoid(psi2, h));
    const std::vector<double> dphi = derivative(phi, h);
    const std::vector<double> dpsi = derivative(psi, h);
    std::vector<double> dphi2(n), dpsi2(n);
    for (int i = 0; i < n; ++i) {
        dphi2[i] = dphi[i] * dphi[i];
        dpsi2[i] = dpsi[i] * dpsi[i];
    }
    out.h1_phi = std::sqrt(out.l2_phi * out.l2_phi + trapezoid(dphi2, h));
    out.h1_psi = std::sqrt(out.l2_psi * out.l2_psi + trapezoid(dpsi2, h));
    return out;
}

double g_increment(const SolverState& state, const WaveAnsatz& ansatz) {
    const int n = state.grid.n;
    const double h = state.grid.h();
    const double a = ansatz.data.a;
    std::vector<double> f(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const AnsatzEval e = ansatz.eval(state.grid.x(i), state.t);
        const double v = state.v[i];
        const double vh = e.v_hat;
        const double m = -e.u1_x;  // positive weight
        if (v > a && vh > a) {
            const double phi = v - vh;
            f[i] = m * phi * phi;
        } else if (v > a && vh > -a && vh <= a) {
            const double d = v - a;  // phi + v^ - a
            f[i] = m * d * d;
        } else if (v > -a && v <= a && vh > a) {
            const double d = a - vh;
            f[i] = m * d * d;
        }
    }
    return trapezoid(f, h);
}

double weighted_norm(const SolverState& state, const WaveAnsatz& ansatz) {
    const int n = state.grid.n;
    const double h = state.grid.h();
    const double sb = ansatz.model.sqrt_b();
    const double var = 2.0 * ansatz.mu * (1.0 + state.t);
    std::vector<double> f(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double x = state.grid.x(i);
        const auto [vh, uh] = ansatz.value(x, state.t);
        const double phi = state.v[i] - vh;
        const double psi = state.u[i] - uh;
        const double d = x - sb * state.t;
        const double w = std::exp(-d * d / var) / std::sqrt(var);
        f[i] = w * w * (phi * phi + psi * psi);
    }
    return trapezoid(f, h);
}

std::vector<double> g_functional(const std::vector<DiagnosticsRecord>& records) {
    std::vector<double> g(records.size(), 0.0);
    for (std::size_t i = 1; i < records.size(); ++i) {
        const double dt = records[i].t - records[i - 1].t;
        g[i] = g[i - 1] + 0.5 * dt * (records[i].g_increment + records[i - 1].g_increment);
    }
    return g;
}

HNorms h_norms(const WaveAnsatz& ansatz, double t) {
    if (!(t >= 0.0)) throw std::domain_error("h_norms: requires t >= 0");
    const double sb = ansatz.model.sqrt_b();
    const double s = std::sqrt(2.0 * ansatz.mu * (1.0 + t));
    const double lo = std::min(sb * t, sb * (1.0 + t)) - 12.0 * s;
    const double hi = lambda2(ansatz.model, ansatz.data.v_plus) * (1.0 + t) + 12.0 * s;
    const auto habs = [&](double x) { return std::abs(ansatz.source_h(x, t)); };
    const auto h2 = [&](double x) {
        const double v = ansatz.source_h(x, t);
        return v * v;
    };
    HNorms out;
    const QuadResult l1 = integrate_adaptive(habs, lo, hi, 1e-11, 40, 64);
    const QuadResult l2 = integrate_adaptive(h2, lo, hi, 1e-13, 40, 64);
    out.l1 = l1.value;
    out.l2 = std::sqrt(std::max(0.0, l2.value));
    out.quadrature_converged = l1.converged && l2.converged;
    const int samples = 8192;
    double sup = 0.0;
    for (int i = 0; i <= samples; ++i)
        sup = std::max(sup, habs(lo + (hi - lo) * i / samples));
    out.linf = sup;
    return out;
}

DecayFit fit_decay(const std::vector<double>& t, const std::vector<double>& value,
                   double t_lo, double t_hi) {
    if (t.size() != value.size())
        throw std::invalid_argument("fit_decay: series lengths differ");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_lo || t[i] > t_hi) continue;
        if (!(value[i] > 0.0))
            throw std::domain_error("fit_decay: values must be positive in the window");
        xs.push_back(std::log1p(t[i]));
        ys.push_back(std::log(value[i]));
    }
    DecayFit fit;
    fit.n_samples = static_cast<int>(xs.size());
    if (fit.n_samples < 8)
        throw std::domain_error("fit_decay: window must contain at least 8 samples");
    const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    if (*mx - *mn < std::log(10.0) * 0.999)
        throw std::domain_error("fit_decay: window must span at least one decade");
    double sx = 0.0, sy = 0.0;
    for (int i = 0; i < fit.n_samples; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx_ = sx / fit.n_samples;
    const double my_ = sy / fit.n_samples;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < fit.n_samples; ++i) {
        sxx += (xs[i] - mx_) * (xs[i] - mx_);
        sxy += (xs[i] - mx_) * (ys[i] - my_);
    }
    fit.exponent = sxy / sxx;
    fit.constant = std::exp(my_ - fit.exponent * mx_);
    double ss = 0.0;
    for (int i = 0; i < fit.n_samples; ++i) {
        const double r = ys[i] - (my_ + fit.exponent * (xs[i] - mx_));
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / fit.n_samples);
    fit.t_first = std::exp(*mn) - 1.0;
    fit.t_last = std::exp(*mx) - 1.0;
    return fit;
}

void DiagnosticsCollector::operator()(const SolverState& state) {
    DiagnosticsRecord rec;
    rec.t = state.t;
    const PerturbationNorms n = perturbation_norms(state, *ansatz_);
    rec.l2_phi = n.l2_phi;
    rec.l2_psi = n.l2_psi;
    rec.h1_phi = n.h1_phi;
    rec.h1_psi = n.h1_psi;
    rec.sup_phi = n.sup_phi;
    rec.sup_psi = n.sup_psi;
    rec.g_increment = g_increment(state, *ansatz_);
    rec.weighted_l2 = weighted_norm(state, *ansatz_);
    rec.x1 = rec.z1 = std::numeric_limits<double>::quiet_NaN();
    if (with_curves_) {
        try {
            rec.x1 = curves_.find_x1(state.t);
            rec.z1 = curves_.find_z1(state.t);
        } catch (const std::exception&) {
            // leave NaN; the curves need not exist at every time
        }
    }
    if (with_h_norms_) {
        const HNorms hn = h_norms(*ansatz_, state.t);
        rec.h_l1 = hn.l1;
        rec.h_linf = hn.linf;
    }
    if (!records_.empty() && rec.t - records_.back().t > 1.0 + 1e-9)
        cadence_warning_ = true;
    records_.push_back(rec);
}

std::vector<double> DiagnosticsCollector::n_series() const {
    std::vector<double> out(records_.size(), 0.0);
    double running = 0.0;
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const double h1 = std::hypot(records_[i].h1_phi, records_[i].h1_psi);
        running = std::max(running, h1);
        out[i] = running;
    }
    return out;
}

}  // namespace compwave
