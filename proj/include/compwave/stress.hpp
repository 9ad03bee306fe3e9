#pragma once

#include <cmath>
#include <stdexcept>

namespace compwave {

/// Piecewise stress law with a linear core and quadratic extensions:
///
///   sigma(v) = b v + k (v - a)^2   for v >= a      (convex branch)
///   sigma(v) = b v                 for |v| <= a    (linear core)
///   sigma(v) = b v - k (v + a)^2   for v <= -a     (concave branch)
///
/// sigma' is continuous everywhere and positive; sigma'' jumps at v = +-a.
/// The quadratic extensions give closed forms for the characteristic speed
/// lambda2 = sqrt(sigma'), its inverse on [a, inf), and its primitive.
struct StressModel {
    double a;  ///< strain threshold of the linear core (> 0)
    double b;  ///< linear-core modulus (> 0)
    double k;  ///< curvature coefficient of the quadratic branches (> 0)

    static StressModel make(double a, double b, double k) {
        if (!(a > 0.0) || !(b > 0.0) || !(k > 0.0))
            throw std::invalid_argument("StressModel: a, b, k must all be positive");
        return StressModel{a, b, k};
    }

    double sqrt_b() const { return std::sqrt(b); }
};

inline double sigma(const StressModel& m, double v) {
    if (v >= m.a) return m.b * v + m.k * (v - m.a) * (v - m.a);
    if (v <= -m.a) return m.b * v - m.k * (v + m.a) * (v + m.a);
    return m.b * v;
}

inline double sigma_prime(const StressModel& m, double v) {
    if (v >= m.a) return m.b + 2.0 * m.k * (v - m.a);
    if (v <= -m.a) return m.b - 2.0 * m.k * (v + m.a);
    return m.b;
}

/// Branch value at the joints: returns 2k at v = a and -2k at v = -a.
inline double sigma_double_prime(const StressModel& m, double v) {
    if (v >= m.a) return 2.0 * m.k;
    if (v <= -m.a) return -2.0 * m.k;
    return 0.0;
}

/// Second characteristic speed lambda2 = sqrt(sigma'(v)).
inline double lambda2(const StressModel& m, double v) {
    return std::sqrt(sigma_prime(m, v));
}

/// Inverse of lambda2 on the convex branch [a, inf): the unique v >= a with
/// lambda2(v) = w. Requires w >= sqrt(b); values within rounding of sqrt(b)
/// are clamped to the branch endpoint.
inline double lambda2_inverse(const StressModel& m, double w) {
    const double wb = m.sqrt_b();
    if (w < wb) {
        if (wb - w > 1e-12 * (1.0 + wb))
            throw std::domain_error("lambda2_inverse: speed below sqrt(b)");
        w = wb;
    }
    return m.a + (w * w - m.b) / (2.0 * m.k);
}

/// Integral of lambda2 over [v_lo, v_hi] inside the convex branch, using the
/// antiderivative (b + 2k(s-a))^{3/2} / (3k) = lambda2(s)^3 / (3k).
inline double lambda2_primitive(const StressModel& m, double v_lo, double v_hi) {
    if (!(v_lo >= m.a) || !(v_hi >= v_lo))
        throw std::domain_error("lambda2_primitive: need a <= v_lo <= v_hi");
    const double wl = lambda2(m, v_lo);
    const double wh = lambda2(m, v_hi);
    return (wh * wh * wh - wl * wl * wl) / (3.0 * m.k);
}

}  // namespace compwave
