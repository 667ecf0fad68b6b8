#pragma once

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace logradius {

/// Solves f(x) = target for a continuous strictly increasing f on [lo, hi]
/// using Newton steps safeguarded by bisection. `df` is f's derivative.
/// Returns the root to within `tol` in x.
template <class F, class DF>
double invert_monotone(const F& f, const DF& df, double target, double lo, double hi, double tol,
                       int max_iter = 200) {
    double flo = f(lo) - target;
    double fhi = f(hi) - target;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo > 0.0 || fhi < 0.0) throw InputError("invert_monotone: target not bracketed");

    double x = lo + (hi - lo) * (-flo) / (fhi - flo);
    for (int it = 0; it < max_iter; ++it) {
        const double fx = f(x) - target;
        if (fx == 0.0) return x;
        if (fx < 0.0) lo = x; else hi = x;
        if (hi - lo <= tol) return 0.5 * (lo + hi);

        const double d = df(x);
        double next = (d > 0.0 && std::isfinite(d)) ? x - fx / d : lo - 1.0;
        // Reject Newton steps that leave the bracket.
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 0.5 * tol) return next;
        x = next;
    }
    return x;
}

}  // namespace logradius
