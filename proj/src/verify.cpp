#include "compwave/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "compwave/quad.hpp"
#include "compwave/rng.hpp"
#include "compwave/rootfind.hpp"

namespace compwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    return sxy / sxx;
}

}  // namespace

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  " << c.detail << "\n";
    os << (all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
    return os.str();
}

CheckResult check_heat_identity(const WaveAnsatz& ansatz, std::uint64_t seed, int points,
                                double tol) {
    SplitMix64 rng(seed);
    const DiffusionWave dw = ansatz.diffusion();
    const double sb = std::sqrt(dw.b);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double t = rng.uniform(0.0, 100.0);
        const double s = std::sqrt(2.0 * dw.mu * (1.0 + t));
        const double x = sb * t + rng.uniform(-10.0, 10.0) * s;
        const Xi2Eval e = xi2_eval(dw, x, t);
        worst = std::max(worst, std::abs(e.t1 + sb * e.x1 - 0.5 * dw.mu * e.x2));
    }
    return {"xi2-heat-identity", worst <= tol,
            "max residual " + fmt(worst) + " (tol " + fmt(tol) + ")"};
}

CheckResult check_contact_residual_q1(const WaveAnsatz& ansatz, std::uint64_t seed,
                                      int points, double tol) {
    SplitMix64 rng(seed);
    const double sb = ansatz.model.sqrt_b();
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double t = rng.uniform(0.0, 100.0);
        const double s = std::sqrt(2.0 * ansatz.mu * (1.0 + t));
        const double x = sb * t + rng.uniform(-10.0, 10.0) * s;
        const ContactEval c = ansatz.contact(x, t);
        const auto [q1, q2] = ansatz.sources_q(x, t);
        (void)q2;
        worst = std::max(worst, std::abs(c.v_t - c.u_x - q1));
    }
    return {"contact-residual-q1", worst <= tol,
            "max |v^c_t - u^c_x - Q1| = " + fmt(worst) + " (tol " + fmt(tol) + ")"};
}

CheckResult check_contact_residual_q2(const WaveAnsatz& ansatz, std::uint64_t seed,
                                      int points, double tol) {
    SplitMix64 rng(seed);
    const double sb = ansatz.model.sqrt_b();
    const double a = ansatz.model.a;
    double worst = 0.0;
    double excess = 0.0;  // second-equation defect where v^c leaves the core
    int used = 0;
    for (int i = 0; i < points; ++i) {
        const double t = rng.uniform(0.0, 100.0);
        const double s = std::sqrt(2.0 * ansatz.mu * (1.0 + t));
        const double x = sb * t + rng.uniform(-10.0, 10.0) * s;
        const ContactEval c = ansatz.contact(x, t);
        const auto [q1, q2] = ansatz.sources_q(x, t);
        (void)q1;
        const double res = c.u_t - sigma_prime(ansatz.model, c.v) * c.v_x -
                           ansatz.mu * c.u_xx - q2;
        if (std::abs(c.v) <= a) {
            worst = std::max(worst, std::abs(res));
            ++used;
        } else {
            excess = std::max(excess, std::abs(res));
        }
    }
    return {"contact-residual-q2", worst <= tol && used > points / 2,
            "max residual " + fmt(worst) + " on |v^c|<=a (" + std::to_string(used) +
                " pts); out-of-core defect " + fmt(excess)};
}

CheckResult check_rarefaction_fd_order(const WaveAnsatz& ansatz, std::uint64_t seed,
                                       int points) {
    const double wl = lambda2(ansatz.model, ansatz.data.a);
    const double wr = lambda2(ansatz.model, ansatz.data.v_plus);
    SplitMix64 rng(seed);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < points; ++i) {
        const double t = rng.uniform(0.5, 2.5);
        const double x = rng.uniform(wl * t - 2.0, wr * t + 2.0);
        pts.emplace_back(x, t);
    }
    const double hs[3] = {1e-2, 5e-3, 2.5e-3};
    double res[3] = {0.0, 0.0, 0.0};
    for (int j = 0; j < 3; ++j) {
        const double h = hs[j];
        for (const auto& [x, t] : pts) {
            const double vt = (ansatz.rarefaction(x, t + h).v -
                               ansatz.rarefaction(x, t - h).v) / (2.0 * h);
            const double ux = (ansatz.rarefaction(x + h, t).u -
                               ansatz.rarefaction(x - h, t).u) / (2.0 * h);
            res[j] = std::max(res[j], std::abs(vt - ux));
        }
    }
    const double o1 = std::log2(res[0] / res[1]);
    const double o2 = std::log2(res[1] / res[2]);
    const bool ok = o1 >= 1.8 && o1 <= 2.2 && o2 >= 1.8 && o2 <= 2.2;
    return {"rarefaction-fd-order", ok,
            "observed orders " + fmt(o1) + ", " + fmt(o2) + " (residuals " + fmt(res[0]) +
                ", " + fmt(res[1]) + ", " + fmt(res[2]) + ")"};
}

CheckResult check_rarefaction_signs(const WaveAnsatz& ansatz, std::uint64_t seed,
                                    int points) {
    const double wl = lambda2(ansatz.model, ansatz.data.a);
    const double wr = lambda2(ansatz.model, ansatz.data.v_plus);
    SplitMix64 rng(seed);
    bool ok = true;
    std::string why;
    for (int i = 0; i < points && ok; ++i) {
        const double t = rng.uniform(0.0, 100.0);
        const double x = rng.uniform(wl * t - 10.0, wr * t + 10.0);
        const RarefactionEval r = ansatz.rarefaction(x, t);
        if (!(r.v_x > 0.0)) { ok = false; why = "v^r_x <= 0"; }
        else if (!(r.u_x < 0.0)) { ok = false; why = "u^r_x >= 0"; }
        else if (!(r.v > ansatz.data.a && r.v < ansatz.data.v_plus)) {
            ok = false;
            why = "v^r outside (a, v+)";
        }
        if (!ok) why += " at (x,t)=(" + fmt(x) + "," + fmt(t) + ")";
    }
    return {"rarefaction-signs", ok, ok ? "v^r_x>0, u^r_x<0, a<v^r<v+ at all samples" : why};
}

EnvelopeSeries rarefaction_l1_series(const WaveAnsatz& ansatz, double t_lo, double t_hi,
                                     int samples) {
    const double wl = lambda2(ansatz.model, ansatz.data.a);
    const double wr = lambda2(ansatz.model, ansatz.data.v_plus);
    EnvelopeSeries out;
    out.t = log_spaced(t_lo, t_hi, samples);
    for (double t : out.t) {
        const auto f = [&](double x) {
            const RarefactionEval r = ansatz.rarefaction(x, t);
            return std::hypot(r.v_x, r.u_x);
        };
        const QuadResult q =
            integrate_adaptive(f, wl * t - 30.0, wr * t + 30.0, 1e-9, 36, 64);
        out.value.push_back(q.value);  // L1 * (1+t)^0
    }
    return out;
}

EnvelopeSeries rarefaction_linf_series(const WaveAnsatz& ansatz, double t_lo, double t_hi,
                                       int samples) {
    const double wl = lambda2(ansatz.model, ansatz.data.a);
    const double wr = lambda2(ansatz.model, ansatz.data.v_plus);
    EnvelopeSeries out;
    out.t = log_spaced(t_lo, t_hi, samples);
    for (double t : out.t) {
        const double lo = wl * t - 30.0;
        const double hi = wr * t + 30.0;
        double sup = 0.0;
        const int n = 8192;
        for (int i = 0; i <= n; ++i) {
            const RarefactionEval r = ansatz.rarefaction(lo + (hi - lo) * i / n, t);
            sup = std::max(sup, std::hypot(r.v_x, r.u_x));
        }
        out.value.push_back(sup * (1.0 + t));
    }
    return out;
}

CheckResult check_envelope_flat(const std::string& name, const EnvelopeSeries& series,
                                double fit_lo, double slope_tol, bool two_sided) {
    double vmax = 0.0;
    bool finite = true;
    for (double v : series.value) {
        if (!std::isfinite(v)) finite = false;
        vmax = std::max(vmax, v);
    }
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < series.t.size(); ++i) {
        if (series.t[i] < fit_lo) continue;
        xs.push_back(std::log1p(series.t[i]));
        ys.push_back(std::log(series.value[i]));
    }
    if (!finite || xs.size() < 8)
        return {name, false, "series not finite or too few tail samples"};
    const double slope = ls_slope(xs, ys);
    const bool ok = two_sided ? std::abs(slope) <= slope_tol : slope <= slope_tol;
    return {name, ok,
            "max " + fmt(vmax) + ", tail slope " + fmt(slope) + " (tol " +
                (two_sided ? "+-" : "<= ") + fmt(slope_tol) + ", fit from t=" +
                fmt(fit_lo) + ")"};
}

HSeries h_series(const WaveAnsatz& ansatz, double t_lo, double t_hi, int samples) {
    HSeries out;
    out.t = log_spaced(t_lo, t_hi, samples);
    for (double t : out.t) {
        const HNorms n = h_norms(ansatz, t);
        out.l1.push_back(n.l1);
        out.linf.push_back(n.linf);
        out.l2.push_back(n.l2);
    }
    return out;
}

CheckResult check_h_l1_envelope(const HSeries& s, double eps, double slope_tol) {
    const double p = 0.5 + 1.0 / (2.0 * (1.0 + eps));
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < s.t.size(); ++i) {
        const double norm = s.l1[i] * std::pow(1.0 + s.t[i], p) /
                            std::sqrt(std::log(2.0 + s.t[i]));
        xs.push_back(std::log1p(s.t[i]));
        ys.push_back(std::log(norm));
    }
    const double slope = ls_slope(xs, ys);
    return {"h-envelope-l1", slope <= slope_tol,
            "normalized slope " + fmt(slope) + " (tol " + fmt(slope_tol) + ", exponent " +
                fmt(p) + ")"};
}

CheckResult check_h_linf_envelope(const HSeries& s, double slope_tol) {
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < s.t.size(); ++i) {
        xs.push_back(std::log1p(s.t[i]));
        ys.push_back(std::log(s.linf[i] * std::sqrt(1.0 + s.t[i])));
    }
    const double slope = ls_slope(xs, ys);
    return {"h-envelope-linf", slope <= slope_tol,
            "normalized slope " + fmt(slope) + " (tol " + fmt(slope_tol) + ")"};
}

CheckResult check_h_interpolation(const HSeries& s, double rel_margin) {
    double worst = -1e300;
    for (std::size_t i = 0; i < s.t.size(); ++i) {
        const double bound = std::sqrt(s.l1[i] * s.linf[i]) * (1.0 + rel_margin);
        worst = std::max(worst, (s.l2[i] - bound) / bound);
    }
    return {"h-interpolation", worst <= 0.0,
            "max relative excess of ||H||_2 over sqrt(||H||_1 ||H||_inf): " + fmt(worst)};
}

InteractionBattery run_interaction_battery(const WaveAnsatz& ansatz, double beta,
                                           double eps, int t_samples, double t_min,
                                           double t_max) {
    InteractionBattery out;
    InteractionCurves curves(ansatz, beta, eps);
    out.t0 = detect_t0(curves, t_min, t_max, t_samples);
    if (!out.t0.found) {
        out.detection = {"t0-detection", false, out.t0.reason};
        const std::string skip = "requires detected T0 (detection failed)";
        out.x1_bounds = {"x1-window-bounds", false, skip};
        out.z1_bounds = {"z1-window-bounds", false, skip};
        out.slack_trends = {"y1-slack-trends", false, skip};
        out.x1_consistency = {"x1-level-consistency", false, skip};
        return out;
    }
    out.detection = {"t0-detection", true, "T0 = " + fmt(out.t0.t0)};

    std::vector<const CurveSample*> tail;
    for (const CurveSample& s : out.t0.samples)
        if (s.t >= out.t0.t0) tail.push_back(&s);

    bool x1_ok = true, z1_ok = true, y1_ok = true;
    for (const CurveSample* s : tail) {
        x1_ok = x1_ok && s->x1_lower_slack >= 0.0 && s->x1_upper_slack >= 0.0;
        z1_ok = z1_ok && s->z1_lower_slack >= 0.0 && s->z1 <= s->x1;
        y1_ok = y1_ok && s->y1 >= 1.0;
    }
    out.x1_bounds = {"x1-window-bounds", x1_ok,
                     "two-sided X1 window on " + std::to_string(tail.size()) +
                         " samples with t >= " + fmt(out.t0.t0)};
    out.z1_bounds = {"z1-window-bounds", z1_ok,
                        "Z1 window (beta = " + fmt(beta) + ") on " +
                            std::to_string(tail.size()) + " samples"};

    // The squared-similarity slacks carry free constants; assert Y1 >= 1, a
    // non-increasing upper slack (fit on the first half, check the second)
    // and a bounded-below lower slack trend.
    bool trend_ok = y1_ok && tail.size() >= 4;
    std::string trend_detail;
    if (tail.size() >= 4) {
        const std::size_t half = tail.size() / 2;
        double c_fit = -1e300, worst_late = -1e300;
        for (std::size_t i = 0; i < half; ++i)
            c_fit = std::max(c_fit, tail[i]->y1_sq_upper_slack);
        for (std::size_t i = half; i < tail.size(); ++i)
            worst_late = std::max(worst_late, tail[i]->y1_sq_upper_slack);
        std::vector<double> xs, ys;
        for (const CurveSample* s : tail) {
            xs.push_back(std::log1p(s->t));
            ys.push_back(s->y1_sq_lower_slack);
        }
        const double lower_trend = ls_slope(xs, ys);
        trend_ok = trend_ok && worst_late <= c_fit + 0.1 && lower_trend >= -0.1;
        trend_detail = "upper slack: early max " + fmt(c_fit) + ", late max " +
                    fmt(worst_late) + "; lower slack trend " + fmt(lower_trend) +
                    "; Y1 >= 1: " + (y1_ok ? "yes" : "no");
    } else {
        trend_detail = "too few samples past T0";
    }
    out.slack_trends = {"y1-slack-trends", trend_ok, trend_detail};

    // The fan value at X1 must agree with a minus the Gaussian tail mass;
    // the defect, scaled by (1+t)^{3/4}, must not trend upward.
    const double amp = ansatz.data.a - ansatz.data.v_minus;
    std::vector<double> xs, ys;
    for (const CurveSample* s : tail) {
        const double t = s->t;
        const double sb = ansatz.model.sqrt_b();
        const double sw = std::sqrt(2.0 * ansatz.mu * (1.0 + t));
        const double z = (s->x1 - sb * t) / sw;
        double wfan = s->x1 / (1.0 + t);
        wfan = std::min(std::max(wfan, lambda2(ansatz.model, ansatz.data.a)),
                        lambda2(ansatz.model, ansatz.data.v_plus));
        const double lhs = std::abs(lambda2_inverse(ansatz.model, wfan) - ansatz.data.a -
                                    0.5 * amp * std::erfc(z));
        if (lhs > 0.0) {
            xs.push_back(std::log1p(t));
            ys.push_back(std::log(lhs * std::pow(1.0 + t, 0.75)));
        }
    }
    if (xs.size() >= 4) {
        const double slope = ls_slope(xs, ys);
        out.x1_consistency = {"x1-level-consistency", slope <= 0.05,
                              "normalized ratio trend " + fmt(slope) + " (tol 0.05)"};
    } else {
        out.x1_consistency = {"x1-level-consistency", false, "too few usable samples"};
    }
    return out;
}

VerifyReport run_verification(const ExperimentConfig& cfg) {
    validate(cfg);
    const StressModel model = StressModel::make(cfg.stress.a, cfg.stress.b, cfg.stress.k);
    if (classify(model, cfg.data.v_minus, cfg.data.v_plus) != CaseLabel::Case1)
        throw ClassificationError("verify requires Case-1 far-field data");
    const FarFieldData data = build_case1(model, cfg.data.v_minus, cfg.data.v_plus);
    const WaveAnsatz ansatz(model, data, cfg.mu);

    VerifyReport report;
    if (cfg.verification.t_samples < 24)
        report.checks.push_back({"sampling-density", true,
                                 "warning: verification.t_samples = " +
                                     std::to_string(cfg.verification.t_samples) +
                                     " is sparse"});

    report.checks.push_back(check_heat_identity(ansatz, cfg.seed));
    report.checks.push_back(check_contact_residual_q1(ansatz, cfg.seed + 1));
    report.checks.push_back(check_contact_residual_q2(ansatz, cfg.seed + 2));
    report.checks.push_back(check_rarefaction_fd_order(ansatz, cfg.seed + 3));
    report.checks.push_back(check_rarefaction_signs(ansatz, cfg.seed + 4));

    const int samples = cfg.verification.t_samples;
    report.checks.push_back(check_envelope_flat(
        "rarefaction-envelope-l1", rarefaction_l1_series(ansatz, 1.0, 1e4, samples), 100.0,
        0.1, true));
    report.checks.push_back(check_envelope_flat(
        "rarefaction-envelope-linf", rarefaction_linf_series(ansatz, 1.0, 1e4, samples), 100.0,
        0.1, true));

    const InteractionBattery ib = run_interaction_battery(
        ansatz, cfg.verification.beta, cfg.verification.eps, samples);
    report.curve_samples = ib.t0.samples;
    report.checks.push_back(ib.detection);
    report.checks.push_back(ib.x1_bounds);
    report.checks.push_back(ib.z1_bounds);
    report.checks.push_back(ib.slack_trends);
    report.checks.push_back(ib.x1_consistency);

    const HSeries hs = h_series(ansatz, 10.0, 1e3, std::min(samples, 24));
    report.checks.push_back(check_h_l1_envelope(hs, cfg.verification.eps));
    report.checks.push_back(check_h_linf_envelope(hs));
    report.checks.push_back(check_h_interpolation(hs));
    return report;
}

}  // namespace compwave
