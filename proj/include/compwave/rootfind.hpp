#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace compwave {

/// Thrown when a root is not bracketed by the supplied interval.
struct RootBracketError : std::runtime_error {
    double a, b, fa, fb;
    RootBracketError(double a_, double b_, double fa_, double fb_)
        : std::runtime_error("root not bracketed on [" + std::to_string(a_) + ", " +
                             std::to_string(b_) + "], f = [" + std::to_string(fa_) + ", " +
                             std::to_string(fb_) + "]"),
          a(a_), b(b_), fa(fa_), fb(fb_) {}
};

/// Bisection for f with f(a) and f(b) of opposite sign (or zero).
/// Stops when the bracket width is <= xtol. Returns the bracket midpoint.
template <class F>
double bisect(F&& f, double a, double b, double xtol, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) throw RootBracketError(a, b, fa, fb);
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;  // bracket at rounding resolution
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fb > 0.0)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

/// Newton iteration safeguarded by a maintained bracket: falls back to
/// bisection whenever the Newton proposal leaves the bracket or fails to
/// shrink it fast enough, so a Newton two-cycle cannot stall the solve.
template <class F, class DF>
double newton_bisect(F&& f, DF&& df, double a, double b, double x0, double xtol,
                     int max_iter = 200) {
    const double fa = f(a);
    const double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) throw RootBracketError(a, b, fa, fb);
    double xl, xh;  // f(xl) < 0 < f(xh)
    if (fa < 0.0) {
        xl = a;
        xh = b;
    } else {
        xl = b;
        xh = a;
    }
    double x = x0;
    if (!(x > std::min(a, b) && x < std::max(a, b))) x = 0.5 * (a + b);
    double dx_old = std::abs(b - a);
    double dx = dx_old;
    double fx = f(x);
    double d = df(x);
    for (int i = 0; i < max_iter; ++i) {
        const bool leaves = (((x - xh) * d - fx) * ((x - xl) * d - fx)) > 0.0;
        if (leaves || std::abs(2.0 * fx) > std::abs(dx_old * d)) {
            dx_old = dx;
            dx = 0.5 * (xh - xl);
            x = xl + dx;
            if (x == xl) return x;  // bracket at rounding resolution
        } else {
            dx_old = dx;
            dx = fx / d;
            const double prev = x;
            x -= dx;
            if (prev == x) return x;
        }
        if (std::abs(dx) < xtol) return x;
        fx = f(x);
        if (fx == 0.0) return x;
        d = df(x);
        if (fx < 0.0) xl = x; else xh = x;
    }
    return x;
}

}  // namespace compwave
