#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

namespace logradius::quadrature {

/// Default composite-Simpson resolution, panels per 2π of interval length.
inline constexpr int default_panels_per_2pi = 4096;

/// Even panel count covering [lo, hi] at the given density (at least 2).
inline std::size_t panel_count(double lo, double hi, int panels_per_2pi) {
    const double turns = (hi - lo) / (2.0 * std::numbers::pi);
    auto n = static_cast<std::size_t>(std::ceil(turns * panels_per_2pi - 1e-9));
    if (n < 2) n = 2;
    if (n % 2) ++n;
    return n;
}

/// Composite Simpson rule with `panels` (even) subintervals.
template <class F>
double simpson(F&& f, double lo, double hi, std::size_t panels) {
    if (panels % 2) ++panels;
    const double h = (hi - lo) / static_cast<double>(panels);
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t i = 1; i < panels; ++i) {
        const double v = f(lo + h * static_cast<double>(i));
        (i % 2 ? odd : even) += v;
    }
    return h / 3.0 * (f(lo) + 4.0 * odd + 2.0 * even + f(hi));
}

/// Running integral of f on the uniform grid lo + i·h, i = 0..intervals.
/// Each interval uses Simpson's rule on its endpoints and midpoint, so the
/// table is fourth-order accurate at every node.
template <class T, class F>
std::vector<T> cumulative_simpson(F&& f, double lo, double hi, std::size_t intervals) {
    std::vector<T> out(intervals + 1);
    const double h = (hi - lo) / static_cast<double>(intervals);
    T acc{};
    T left = f(lo);
    out[0] = acc;
    for (std::size_t i = 0; i < intervals; ++i) {
        const double a = lo + h * static_cast<double>(i);
        const T mid = f(a + 0.5 * h);
        const T right = f(i + 1 == intervals ? hi : a + h);
        acc += (left + 4.0 * mid + right) * (h / 6.0);
        out[i + 1] = acc;
        left = right;
    }
    return out;
}

}  // namespace logradius::quadrature
