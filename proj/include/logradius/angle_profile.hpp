#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "curve.hpp"
#include "errors.hpp"
#include "profile.hpp"
#include "quadrature.hpp"
#include "roots.hpp"

namespace logradius {

/// Fourier descriptor pair of harmonic k: a·cos(ksΘ) + b·sin(ksΘ).
struct Descriptor {
    int k = 0;
    double a = 0.0;
    double b = 0.0;

    friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

/// Tangent angle as a function of normalized arc length s ∈ [0, 1]:
/// θ(s) = sΘ + Σ a_k cos(ksΘ) + b_k sin(ksΘ).
class AngleProfile {
public:
    explicit AngleProfile(double total_turn = two_pi, std::vector<Descriptor> descriptors = {})
        : total_turn_(total_turn), descriptors_(std::move(descriptors)) {
        if (!std::isfinite(total_turn_)) throw InputError("total turn must be finite");
        std::sort(descriptors_.begin(), descriptors_.end(),
                  [](const Descriptor& x, const Descriptor& y) { return x.k < y.k; });
        for (std::size_t i = 0; i < descriptors_.size(); ++i) {
            const auto& d = descriptors_[i];
            if (d.k < 1) throw InputError("descriptor k must be positive");
            if (i > 0 && descriptors_[i - 1].k == d.k) throw InputError("duplicate descriptor k=" + std::to_string(d.k));
            if (!std::isfinite(d.a) || !std::isfinite(d.b)) throw InputError("descriptor coefficients must be finite");
        }
    }

    double total_turn() const noexcept { return total_turn_; }
    const std::vector<Descriptor>& descriptors() const noexcept { return descriptors_; }

    /// θ(s) for any real s (the series extends periodically past [0, 1]).
    double value(double s) const noexcept {
        const double w = s * total_turn_;
        double t = w;
        for (const auto& d : descriptors_) t += d.a * std::cos(d.k * w) + d.b * std::sin(d.k * w);
        return t;
    }

    /// dθ/ds.
    double rate(double s) const noexcept {
        const double w = s * total_turn_;
        double r = 1.0;
        for (const auto& d : descriptors_) r += d.k * (d.b * std::cos(d.k * w) - d.a * std::sin(d.k * w));
        return total_turn_ * r;
    }

    friend bool operator==(const AngleProfile&, const AngleProfile&) = default;

private:
    double total_turn_;
    std::vector<Descriptor> descriptors_;
};

inline double evaluate_angle(const AngleProfile& p, double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("arc-length coordinate must lie in [0, 1]");
    return p.value(s);
}

/// θ_k(s) = sΘ + a_k cos(ksΘ).
inline AngleProfile single_component(int k, double a_k, double total_turn = two_pi) {
    if (k < 1) throw InputError("k must be >= 1");
    if (a_k == 0.0) return AngleProfile(total_turn);
    return AngleProfile(total_turn, {{k, a_k, 0.0}});
}

/// Sums descriptors at equal k. The sΘ trend is shared, not doubled.
inline AngleProfile add_angle_profiles(const AngleProfile& p1, const AngleProfile& p2) {
    const double t1 = p1.total_turn();
    const double t2 = p2.total_turn();
    if (std::abs(t1 - t2) > 1e-12 * std::max(std::abs(t1), std::abs(t2))) {
        throw InputError("angle profiles with different total turn cannot be added");
    }
    std::vector<Descriptor> out;
    auto a = p1.descriptors().begin();
    auto b = p2.descriptors().begin();
    const auto ae = p1.descriptors().end();
    const auto be = p2.descriptors().end();
    while (a != ae || b != be) {
        Descriptor d;
        if (b == be || (a != ae && a->k < b->k)) {
            d = *a++;
        } else if (a == ae || b->k < a->k) {
            d = *b++;
        } else {
            d = {a->k, a->a + b->a, a->b + b->b};
            ++a;
            ++b;
        }
        if (d.a != 0.0 || d.b != 0.0) out.push_back(d);
    }
    return AngleProfile(t1, std::move(out));
}

/// min dθ/ds over s = j/samples, j = 0..samples. Positive iff convex (at that resolution).
inline double convexity_margin(const AngleProfile& p, int samples) {
    if (samples < 64) throw PreconditionError("convexity_margin needs samples >= 64");
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= samples; ++j) m = std::min(m, p.rate(static_cast<double>(j) / samples));
    return m;
}

/// Integrates the unit-speed velocity (cos θ(s), sin θ(s)) over s ∈ [0, 1].
inline PlaneCurve render_from_angle(const AngleProfile& p, int samples,
                                    double closure_tolerance = default_closure_tolerance) {
    if (samples < 16) throw PreconditionError("render_from_angle needs samples >= 16");
    const auto n = static_cast<std::size_t>(samples);
    const auto table = quadrature::cumulative_simpson<Point>(
        [&](double s) {
            const double t = p.value(s);
            return Point{std::cos(t), std::sin(t)};
        },
        0.0, 1.0, n);
    std::vector<double> s(n + 1);
    for (std::size_t i = 0; i <= n; ++i) s[i] = i == n ? 1.0 : static_cast<double>(i) / static_cast<double>(n);
    PlaneCurve open(table, s, s, false);
    const double d = diameter(open);
    if (d > 0.0 && closure_gap(open) <= closure_tolerance) return PlaneCurve(table, s, s, true);
    return open;
}

// ---------------------------------------------------------------------------
// Conversions

/// Uniform log-radius samples over [0, Θ), ready for spectrum::decompose.
struct SampledLogRadius {
    std::vector<double> samples;
    double base_period = two_pi;
};

/// l(θ) = −log(dθ/ds) on a uniform θ grid, inverting θ(s) numerically.
/// Arc length is the normalized s, so a circle yields log(1/Θ).
inline SampledLogRadius angle_to_logradius(const AngleProfile& p, int samples) {
    if (samples < 16) throw PreconditionError("angle_to_logradius needs samples >= 16");
    const double theta_total = p.total_turn();
    if (!(theta_total > 0.0)) throw RepresentabilityError("total turn must be positive for a convex curve");
    const double margin = convexity_margin(p, std::max(samples, 4096));
    if (!(margin > 0.0)) {
        throw ConvexityError(margin, "angle profile is not convex (convexity margin " + std::to_string(margin) + ")");
    }

    double bound = 0.0;
    for (const auto& d : p.descriptors()) bound += std::abs(d.a) + std::abs(d.b);

    SampledLogRadius out{std::vector<double>(static_cast<std::size_t>(samples)), theta_total};
    auto f = [&](double s) { return p.value(s); };
    auto df = [&](double s) { return p.rate(s); };
    for (int j = 0; j < samples; ++j) {
        const double target = theta_total * j / samples;
        const double lo = (target - bound) / theta_total - 1e-9;
        const double hi = (target + bound) / theta_total + 1e-9;
        const double s = invert_monotone(f, df, target, lo, hi, 1e-15);
        out.samples[static_cast<std::size_t>(j)] = -std::log(p.rate(s));
    }
    return out;
}

/// Result of converting a log-radius profile to Fourier-descriptor form.
/// The angle representation drops overall scale and orientation; they are
/// kept here so the conversion can be undone:
///   l(θ) = l_angle(θ − rotation) + log(arc_length).
struct AngleConversion {
    AngleProfile profile;
    double arc_length = 1.0;  ///< total length of one period of the curve
    double rotation = 0.0;    ///< mean tangent offset removed from θ(s) − sΘ
};

/// Builds s(θ) = ∫ r dθ over one period, inverts it on a uniform s grid and
/// projects θ(s) − sΘ onto the descriptor basis up to max_k.
/// `samples` is the number of θ intervals (and s nodes) over the period.
/// The basis cos(ksΘ), sin(ksΘ) only spans s-harmonics that are multiples of
/// Θ/2π, so for multi-turn profiles (Θ = 4π, ...) the projection is a least
/// squares approximation. Exact round trips need a single-turn period.
inline AngleConversion logradius_to_angle_detailed(const LogRadiusProfile& p, int samples, int max_k) {
    if (samples < 16) throw PreconditionError("logradius_to_angle needs samples >= 16");
    if (max_k < 1) throw InputError("max_k must be >= 1");
    const auto turns = period_turns(p);
    if (!turns) throw ClosureError("profile is aperiodic; the angle representation needs a closed curve");
    if (!closes(p)) throw ClosureError("profile does not close over its period");
    const double theta_total = two_pi * static_cast<double>(*turns);
    if (static_cast<long long>(samples) < 2LL * *turns * max_k + 1) {
        throw InputError("samples must exceed 2*n*max_k for the descriptor projection");
    }

    const auto n = static_cast<std::size_t>(samples);
    const double h = theta_total / static_cast<double>(n);
    auto r = [&](double t) { return std::exp(p.value(t)); };
    const auto table = quadrature::cumulative_simpson<double>(r, 0.0, theta_total, n);
    const double total = table.back();
    if (!std::isfinite(total) || !(total > 0.0)) throw NumericRangeError("arc length overflow");

    std::vector<double> residual(n);
    std::size_t seg = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const double target = total * static_cast<double>(j) / static_cast<double>(n);
        while (seg + 1 < n && table[seg + 1] <= target) ++seg;
        const double t0 = h * static_cast<double>(seg);
        const double t1 = seg + 1 == n ? theta_total : t0 + h;
        auto s_of = [&](double t) {
            const double w = t - t0;
            return table[seg] + w / 6.0 * (r(t0) + 4.0 * r(t0 + 0.5 * w) + r(t));
        };
        const double theta = invert_monotone(s_of, r, target, t0, t1, 1e-15 * theta_total);
        residual[j] = theta - theta_total * static_cast<double>(j) / static_cast<double>(n);
    }

    double mean = 0.0;
    for (double v : residual) mean += v;
    mean /= static_cast<double>(n);

    std::vector<Descriptor> descs;
    for (int k = 1; k <= max_k; ++k) {
        double a = 0.0;
        double b = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double w = theta_total * k * static_cast<double>(j) / static_cast<double>(n);
            a += (residual[j] - mean) * std::cos(w);
            b += (residual[j] - mean) * std::sin(w);
        }
        a *= 2.0 / static_cast<double>(n);
        b *= 2.0 / static_cast<double>(n);
        if (std::hypot(a, b) > 1e-12) descs.push_back({k, a, b});
    }
    return {AngleProfile(theta_total, std::move(descs)), total, mean};
}

inline AngleProfile logradius_to_angle(const LogRadiusProfile& p, int samples, int max_k) {
    return logradius_to_angle_detailed(p, samples, max_k).profile;
}

}  // namespace logradius
