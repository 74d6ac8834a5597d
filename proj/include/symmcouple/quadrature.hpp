#pragma once

#include <cmath>
#include <utility>

namespace symmcouple {

namespace detail {

template <class F>
double simpson(F& f, double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_step(F& f, double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    const double diff = left + right - whole;
    if (depth <= 0 || std::fabs(diff) <= 15.0 * tol)
        return left + right + diff / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson on [a,b]. rel_tol is applied against a coarse magnitude
/// estimate; abs floor guards integrals that are genuinely ~0.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double rel_tol = 1e-9,
                        int max_depth = 48) {
    if (!(b > a)) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = detail::simpson(f, a, b, fa, fm, fb);
    double scale = std::fabs(whole);
    if (scale == 0.0) scale = (b - a) * (std::fabs(fa) + std::fabs(fm) + std::fabs(fb));
    double tol = rel_tol * (scale > 0 ? scale : 1.0);
    return detail::adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace symmcouple
