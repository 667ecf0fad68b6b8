#pragma once

// Shared helpers for the test suites: seeded random generators and
// integration oracles that do not go through the library's quadrature.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <logradius/logradius.hpp>

namespace logradius::testing {

struct RandomProfileOptions {
    int max_components = 4;
    double max_epsilon = 1.0;
    int max_num = 8;
    int max_den = 8;
    double max_constant = 1.0;
    double max_slope = 0.3;
};

inline Frequency random_rational(std::mt19937_64& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> m(1, max_num);
    std::uniform_int_distribution<int> n(1, max_den);
    return Frequency::rational(m(rng), n(rng));
}

inline LogRadiusProfile random_profile(std::mt19937_64& rng, const RandomProfileOptions& o = {}) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, two_pi);
    std::uniform_int_distribution<int> count(0, o.max_components);
    std::vector<ElementaryComponent> comps;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        comps.emplace_back(random_rational(rng, o.max_num, o.max_den), o.max_epsilon * unit(rng), phase(rng));
    }
    return {o.max_constant * unit(rng), o.max_slope * unit(rng), std::move(comps)};
}

/// Quadrature form of a component: (ε cos νθ₀, ε sin νθ₀). Equal quadratures
/// mean equal functions regardless of how ε's sign and θ₀ were canonicalized.
inline std::complex<double> phasor(const ElementaryComponent& c) {
    return std::polar(c.epsilon(), c.frequency().value() * c.theta0());
}

/// Same frequencies and term values within `tol`.
inline bool structurally_close(const LogRadiusProfile& a, const LogRadiusProfile& b, double tol) {
    if (std::abs(a.constant() - b.constant()) > tol || std::abs(a.slope() - b.slope()) > tol) return false;
    if (!(a.domain() == b.domain())) return false;
    const auto ca = a.components();
    const auto cb = b.components();
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (!(ca[i].frequency() == cb[i].frequency())) return false;
        if (std::abs(phasor(ca[i]) - phasor(cb[i])) > tol) return false;
    }
    return true;
}

/// Endpoint of Γ(θ) = ∫ exp(l) (cos, sin) dθ over [lo, hi] by composite
/// 5-point Gauss–Legendre. Independent of the library's Simpson tables.
inline std::complex<double> gauss_endpoint(const LogRadiusProfile& p, double lo, double hi, int panels) {
    static const double x[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                0.9061798459386640};
    static const double w[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665, 0.2369268850561891,
                                0.2369268850561891};
    const double h = (hi - lo) / panels;
    std::complex<double> acc = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double mid = lo + (i + 0.5) * h;
        for (int q = 0; q < 5; ++q) {
            const double t = mid + 0.5 * h * x[q];
            acc += w[q] * std::exp(p.value(t)) * std::polar(1.0, t);
        }
    }
    return 0.5 * h * acc;
}

/// Trapezoid samples of the same integral at `n` uniform steps (points 0..n).
/// Spectrally accurate over whole periods.
inline std::vector<std::complex<double>> trapezoid_path(const LogRadiusProfile& p, double lo, double hi, int n) {
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n) + 1);
    const double h = (hi - lo) / n;
    auto f = [&](double t) { return std::exp(p.value(t)) * std::polar(1.0, t); };
    std::complex<double> prev = f(lo);
    for (int i = 1; i <= n; ++i) {
        const auto cur = f(lo + i * h);
        out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i) - 1] + 0.5 * h * (prev + cur);
        prev = cur;
    }
    return out;
}

/// Angle-profile endpoint ∫₀¹ (cos θ(s), sin θ(s)) ds by composite Gauss–Legendre.
inline std::complex<double> gauss_angle_endpoint(const AngleProfile& p, int panels) {
    static const double x[3] = {0.0, -0.7745966692414834, 0.7745966692414834};
    static const double w[3] = {0.8888888888888888, 0.5555555555555556, 0.5555555555555556};
    const double h = 1.0 / panels;
    std::complex<double> acc = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double mid = (i + 0.5) * h;
        for (int q = 0; q < 3; ++q) acc += w[q] * std::polar(1.0, p.value(mid + 0.5 * h * x[q]));
    }
    return 0.5 * h * acc;
}

}  // namespace logradius::testing
