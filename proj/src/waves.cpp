#include "compwave/waves.hpp"

#include <cmath>
#include <stdexcept>

#include "compwave/rootfind.hpp"

namespace compwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Underflow-safe sech^2; exp(-2|x|) vanishes long before cosh overflows.
double sech2(double x) {
    const double e = std::exp(-2.0 * std::abs(x));
    const double d = 1.0 + e;
    return 4.0 * e / (d * d);
}

}  // namespace

BurgersEval burgers_eval(double w_minus, double w_plus, double x, double t,
                         double width) {
    if (!(w_minus <= w_plus))
        throw std::invalid_argument("burgers_eval: requires w_minus <= w_plus");
    if (!(t >= 0.0)) throw std::domain_error("burgers_eval: requires t >= 0");
    if (!(width > 0.0)) throw std::invalid_argument("burgers_eval: width must be > 0");

    const double mid = 0.5 * (w_plus + w_minus);
    const double half = 0.5 * (w_plus - w_minus);
    const auto w0 = [&](double s) { return mid + half * std::tanh(s / width); };
    const auto w0p = [&](double s) { return half / width * sech2(s / width); };

    BurgersEval out;
    double x0 = x;
    if (t > 0.0 && half > 0.0) {
        // x0 + w0(x0) t = x has a unique root; w0 in (w-, w+) brackets it with
        // a unit margin so the endpoint signs survive rounding.
        const double lo = x - w_plus * t - 1.0;
        const double hi = x - w_minus * t + 1.0;
        const auto g = [&](double s) { return s + w0(s) * t - x; };
        const auto gp = [&](double s) { return 1.0 + w0p(s) * t; };
        // |x0| only matters within the tanh transition (~40 widths); past it
        // the data saturates in double precision, so an absolute tolerance of
        // 1e-13 * (1 + 40 width) resolves every root that can be resolved.
        const double tol = 1e-13 * (1.0 + 40.0 * width);
        x0 = newton_bisect(g, gp, lo, hi, x - mid * t, tol);
    } else if (half == 0.0) {
        x0 = x - mid * t;  // constant data: trivial characteristics
    }
    const double wp = w0p(x0);
    const double wpp = -2.0 * half / (width * width) * sech2(x0 / width) *
                       std::tanh(x0 / width);
    const double denom = 1.0 + wp * t;
    out.x0 = x0;
    out.w = w0(x0);
    out.w_x = wp / denom;
    out.w_xx = wpp / (denom * denom * denom);
    out.w_t = -out.w * out.w_x;
    return out;
}

double burgers_w(double w_minus, double w_plus, double x, double t, double width) {
    return burgers_eval(w_minus, w_plus, x, t, width).w;
}

double exact_fan(double w_minus, double w_plus, double x, double t) {
    if (!(t > 0.0)) throw std::domain_error("exact_fan: requires t > 0");
    const double xi = x / t;
    if (xi <= w_minus) return w_minus;
    if (xi >= w_plus) return w_plus;
    return xi;
}

Xi2Eval xi2_eval(const DiffusionWave& dw, double x, double t) {
    if (!(t >= 0.0)) throw std::domain_error("xi2_eval: requires t >= 0");
    const double s = std::sqrt(2.0 * dw.mu * (1.0 + t));
    const double z = (x - std::sqrt(dw.b) * t) / s;
    Xi2Eval out;
    // Tail short-circuit: e^{-z^2} underflows near |z| ~ 27; switch to the
    // exact far-field limits before derivative polynomials can produce 0*inf.
    if (z <= -30.0) {
        out.xi = dw.v_minus;
        return out;
    }
    if (z >= 30.0) {
        out.xi = dw.a;
        return out;
    }
    const double amp = dw.a - dw.v_minus;
    const double A = amp / std::sqrt(kPi);
    const double E = std::exp(-z * z);
    out.xi = dw.v_minus + 0.5 * amp * std::erfc(-z);
    out.x1 = A * E / s;
    out.x2 = A * E * (-2.0 * z) / (s * s);
    out.x3 = A * E * (4.0 * z * z - 2.0) / (s * s * s);
    const double s_t = dw.mu / s;
    const double z_t = -(std::sqrt(dw.b) + z * s_t) / s;
    out.t1 = A * E * z_t;
    out.xt = (A * E / s) * (-2.0 * z * z_t - s_t / s);
    return out;
}

double xi2(const DiffusionWave& dw, double x, double t, int order) {
    const Xi2Eval e = xi2_eval(dw, x, t);
    switch (order) {
        case 0: return e.xi;
        case 1: return e.x1;
        case 2: return e.x2;
        case 3: return e.x3;
        default: throw std::domain_error("xi2: order must be in 0..3");
    }
}

namespace {

ContactEval contact_from(const Xi2Eval& e, double mu, double sb) {
    const double c1 = mu / (4.0 * sb);
    ContactEval out;
    out.v = e.xi + c1 * e.x1;
    out.u = 0.25 * mu * e.x1 - sb * e.xi;
    out.v_x = e.x1 + c1 * e.x2;
    out.v_xx = e.x2 + c1 * e.x3;
    out.u_x = 0.25 * mu * e.x2 - sb * e.x1;
    out.u_xx = 0.25 * mu * e.x3 - sb * e.x2;
    out.v_t = e.t1 + c1 * e.xt;
    out.u_t = 0.25 * mu * e.xt - sb * e.t1;
    return out;
}

}  // namespace

RarefactionEval WaveAnsatz::rarefaction(double x, double t) const {
    const double wl = lambda2(model, data.a);
    const double wr = lambda2(model, data.v_plus);
    const BurgersEval be = burgers_eval(wl, wr, x, t, burgers_width);
    const double k = model.k;
    const double w = be.w;
    RarefactionEval out;
    out.w = w;
    out.v = lambda2_inverse(model, w);
    // u = u_a - int_a^v lambda2 = u_a - (w^3 - b^{3/2}) / (3k)
    out.u = data.u_a - (w * w * w - model.b * model.sqrt_b()) / (3.0 * k);
    out.v_x = (w / k) * be.w_x;
    out.u_x = -(w * w / k) * be.w_x;
    out.v_xx = (be.w_x * be.w_x + w * be.w_xx) / k;
    out.u_xx = -(2.0 * w * be.w_x * be.w_x + w * w * be.w_xx) / k;
    out.v_t = out.u_x;                  // v_t - u_x = 0 holds identically
    out.u_t = (w * w * w / k) * be.w_x;  // equals (sigma(v))_x
    return out;
}

ContactEval WaveAnsatz::contact(double x, double t) const {
    return contact_from(xi2_eval(diffusion(), x, t), mu, model.sqrt_b());
}

std::pair<double, double> WaveAnsatz::sources_q(double x, double t) const {
    const Xi2Eval e = xi2_eval(diffusion(), x, t);
    const double q1 = mu * mu / (8.0 * model.sqrt_b()) * e.x3;
    return {q1, -model.sqrt_b() * q1};
}

std::pair<double, double> WaveAnsatz::value(double x, double t) const {
    const ContactEval c = contact(x, t);
    const RarefactionEval r = rarefaction(x, t + time_shift);
    return {c.v + r.v - data.a, c.u + r.u - data.u_a};
}

double WaveAnsatz::source_h(double x, double t) const {
    return eval(x, t).h;
}

std::pair<double, double> WaveAnsatz::w1w2(double x, double t) const {
    const Xi2Eval e = xi2_eval(diffusion(), x, t);
    const double c1 = mu / (4.0 * model.sqrt_b());
    return {c1 * e.x1, e.xi};
}

double WaveAnsatz::v_hat1(double x, double t) const {
    const Xi2Eval e = xi2_eval(diffusion(), x, t);
    const RarefactionEval r = rarefaction(x, t + time_shift);
    return e.xi + r.v - data.a;
}

AnsatzEval WaveAnsatz::eval(double x, double t) const {
    AnsatzEval out;
    const Xi2Eval e = xi2_eval(diffusion(), x, t);
    const double sb = model.sqrt_b();
    out.contact = contact_from(e, mu, sb);
    out.rare = rarefaction(x, t + time_shift);
    const ContactEval& c = out.contact;
    const RarefactionEval& r = out.rare;

    out.v_hat = c.v + r.v - data.a;
    out.u_hat = c.u + r.u - data.u_a;
    out.v_hat_x = c.v_x + r.v_x;
    out.u_hat_x = c.u_x + r.u_x;
    out.u_hat_xx = c.u_xx + r.u_xx;
    out.q1 = mu * mu / (8.0 * sb) * e.x3;
    out.q2 = -sb * out.q1;
    // H = -(sigma(v^) - sigma(v^c) - sigma(v^r))_x - mu u^r_xx + Q2, expanded
    // through the chain rule so every factor is closed form.
    const double bracket = sigma_prime(model, out.v_hat) * out.v_hat_x -
                           sigma_prime(model, c.v) * c.v_x -
                           sigma_prime(model, r.v) * r.v_x;
    out.h = -bracket - mu * r.u_xx + out.q2;
    out.v_hat1 = e.xi + r.v - data.a;
    out.u1_x = r.u_x - sb * e.x1;
    return out;
}

}  // namespace compwave
