#pragma once

#include <utility>

#include "compwave/riemann.hpp"
#include "compwave/stress.hpp"

namespace compwave {

// ---------------------------------------------------------------------------
// Smoothed Burgers wave (the rarefaction carrier)
// ---------------------------------------------------------------------------

/// Classical solution of w_t + w w_x = 0 with monotone data
///   w0(x) = (w+ + w-)/2 + (w+ - w-)/2 * tanh(x / width),
/// evaluated by solving the characteristic equation x = x0 + w0(x0) t.
/// Monotone data means characteristics never cross for t >= 0, so the root
/// x0 is unique and the solution stays smooth.
struct BurgersEval {
    double w = 0.0;
    double w_x = 0.0;
    double w_xx = 0.0;
    double w_t = 0.0;  ///< equals -w * w_x
    double x0 = 0.0;   ///< characteristic foot point
};

BurgersEval burgers_eval(double w_minus, double w_plus, double x, double t,
                         double width = 1.0);

/// Convenience: just the wave value.
double burgers_w(double w_minus, double w_plus, double x, double t, double width = 1.0);

/// Self-similar weak solution of the Riemann problem (the exact fan).
/// Requires t > 0.
double exact_fan(double w_minus, double w_plus, double x, double t);

// ---------------------------------------------------------------------------
// Linear diffusion wave Xi2
// ---------------------------------------------------------------------------

/// The error-function profile
///   Xi2(x,t) = v- + (a - v-)/sqrt(pi) * int_{-inf}^{z} e^{-s^2} ds,
///   z = (x - sqrt(b) t) / sqrt(2 mu (1+t)),
/// solving Xi2_t + sqrt(b) Xi2_x = (mu/2) Xi2_xx with limits v- / a.
struct DiffusionWave {
    double v_minus;
    double a;
    double b;
    double mu;
};

struct Xi2Eval {
    double xi = 0.0;   ///< Xi2
    double x1 = 0.0;   ///< d/dx
    double x2 = 0.0;   ///< d2/dx2
    double x3 = 0.0;   ///< d3/dx3
    double t1 = 0.0;   ///< d/dt (closed form through z_t, not via the PDE)
    double xt = 0.0;   ///< d2/dxdt
};

Xi2Eval xi2_eval(const DiffusionWave& dw, double x, double t);

/// Xi2 spatial derivative of the given order (0..3).
double xi2(const DiffusionWave& dw, double x, double t, int order);

// ---------------------------------------------------------------------------
// Wave ansatz: rarefaction + viscous contact composite
// ---------------------------------------------------------------------------

struct RarefactionEval {
    double v = 0.0, u = 0.0;
    double v_x = 0.0, u_x = 0.0;
    double v_xx = 0.0, u_xx = 0.0;
    double v_t = 0.0, u_t = 0.0;
    double w = 0.0;  ///< carrier speed lambda2(v)
};

struct ContactEval {
    double v = 0.0, u = 0.0;
    double v_x = 0.0, u_x = 0.0;
    double v_xx = 0.0, u_xx = 0.0;
    double v_t = 0.0, u_t = 0.0;
};

/// Everything the solver and diagnostics need at one point (x, t).
struct AnsatzEval {
    double v_hat = 0.0, u_hat = 0.0;
    double v_hat_x = 0.0, u_hat_x = 0.0;
    double u_hat_xx = 0.0;
    double q1 = 0.0, q2 = 0.0;
    double h = 0.0;
    double v_hat1 = 0.0;  ///< Xi2 + v^r - a (ansatz minus the Xi2_x correction)
    double u1_x = 0.0;    ///< u^r_x - sqrt(b) Xi2_x  (negative everywhere)
    RarefactionEval rare;
    ContactEval contact;
};

/// Evaluator bundle for the composite wave (v^, u^) of far-field data in
/// Case 1. The rarefaction piece is evaluated at the shifted time 1 + t
/// (time_shift), which keeps t = 0 away from the fan singularity; the
/// contact piece carries its own 1 + t inside Xi2.
struct WaveAnsatz {
    StressModel model;
    FarFieldData data;
    double mu;
    double time_shift = 1.0;
    double burgers_width = 1.0;

    WaveAnsatz(const StressModel& m, const FarFieldData& d, double mu_)
        : model(m), data(d), mu(mu_) {}

    DiffusionWave diffusion() const { return {data.v_minus, data.a, model.b, mu}; }

    /// Rarefaction profile at plain time t (no shift applied).
    RarefactionEval rarefaction(double x, double t) const;

    /// Viscous contact profile at time t.
    ContactEval contact(double x, double t) const;

    /// Source pair (Q1, Q2) of the contact-wave equations.
    std::pair<double, double> sources_q(double x, double t) const;

    /// Composite values (v^, u^).
    std::pair<double, double> value(double x, double t) const;

    /// Source H of the composite second equation.
    double source_h(double x, double t) const;

    /// Diagonal variables (w1, w2) with v^c = w1 + w2, u^c = sqrt(b)(w1 - w2).
    std::pair<double, double> w1w2(double x, double t) const;

    /// Xi2 + v^r - a, the monotone function defining the interaction curves.
    double v_hat1(double x, double t) const;

    /// Full evaluation (profiles, derivatives, sources) at (x, t).
    AnsatzEval eval(double x, double t) const;
};

}  // namespace compwave
