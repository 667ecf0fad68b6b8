#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "errors.hpp"
#include "profile.hpp"

namespace logradius {

/// Bins with amplitude at or below this are dropped from decompositions.
inline constexpr double spectrum_amplitude_floor = 1e-12;

/// One harmonic ε·sin(ν(θ − θ₀)) with ν = 2πk/Θ. ε ≥ 0, θ₀ ∈ [0, Θ/k).
struct SpectralBin {
    int k = 0;
    double amplitude = 0.0;
    double theta0 = 0.0;

    friend bool operator==(const SpectralBin&, const SpectralBin&) = default;
};

/// Mean plus harmonics of a profile that is periodic with base period Θ.
struct ShapeSpectrum {
    double base_period = two_pi;
    double mean = 0.0;
    std::vector<SpectralBin> bins;  // sorted by k, unique

    double frequency(int k) const noexcept { return two_pi * k / base_period; }

    /// (Θ/2)·Σε², the centered squared norm over one period.
    double energy() const noexcept {
        double e = 0.0;
        for (const auto& b : bins) e += b.amplitude * b.amplitude;
        return 0.5 * base_period * e;
    }

    friend bool operator==(const ShapeSpectrum&, const ShapeSpectrum&) = default;
};

/// Sine/cosine coefficients (B, A) of a bin: ε sin(ν(θ−θ₀)) = B sin νθ + A cos νθ.
struct Quadrature {
    double sin_coef = 0.0;
    double cos_coef = 0.0;
};

inline Quadrature quadrature_of(const SpectralBin& b, double base_period) {
    const double phi = two_pi * b.k / base_period * b.theta0;
    return {b.amplitude * std::cos(phi), -b.amplitude * std::sin(phi)};
}

/// Discrete Fourier analysis of uniform samples over one period [0, Θ).
///
/// Direct O(N·max_k) summation against an exact twiddle table. Each harmonic
/// B sin + A cos is converted to ε sin(ν(θ − θ₀)) with ε ≥ 0.
inline ShapeSpectrum decompose(std::span<const double> samples, double base_period, int max_k,
                               double amplitude_floor = spectrum_amplitude_floor) {
    if (max_k < 1) throw InputError("max_k must be >= 1");
    if (!(base_period > 0.0) || !std::isfinite(base_period)) throw InputError("period must be positive and finite");
    const std::size_t n = samples.size();
    if (n < 2 * static_cast<std::size_t>(max_k) + 1) {
        throw InputError("need at least 2*max_k+1 samples (got " + std::to_string(n) + ")");
    }
    for (double v : samples) {
        if (!std::isfinite(v)) throw InputError("samples must be finite");
    }

    std::vector<double> cos_table(n);
    std::vector<double> sin_table(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double a = two_pi * static_cast<double>(j) / static_cast<double>(n);
        cos_table[j] = std::cos(a);
        sin_table[j] = std::sin(a);
    }

    ShapeSpectrum out;
    out.base_period = base_period;
    double sum = 0.0;
    for (double v : samples) sum += v;
    out.mean = sum / static_cast<double>(n);

    for (int k = 1; k <= max_k; ++k) {
        double a = 0.0;
        double b = 0.0;
        std::size_t idx = 0;
        for (std::size_t j = 0; j < n; ++j) {
            a += samples[j] * cos_table[idx];
            b += samples[j] * sin_table[idx];
            idx += static_cast<std::size_t>(k);
            if (idx >= n) idx -= n;
        }
        a *= 2.0 / static_cast<double>(n);
        b *= 2.0 / static_cast<double>(n);
        const double eps = std::hypot(a, b);
        if (eps <= amplitude_floor) continue;
        const double nu = two_pi * k / base_period;
        const double theta0 = detail::reduce_phase(std::atan2(-a, b) / nu, base_period / k);
        out.bins.push_back({k, eps, theta0});
    }
    return out;
}

/// Like decompose, but validates that `thetas` is a uniform grid starting at 0.
/// Θ is inferred as N·Δθ.
inline ShapeSpectrum decompose_sampled(std::span<const double> thetas, std::span<const double> values, int max_k) {
    if (thetas.size() != values.size()) throw InputError("theta and value arrays differ in length");
    if (thetas.size() < 2) throw InputError("too few samples");
    const double h = thetas[1] - thetas[0];
    if (!(h > 0.0)) throw InputError("sample thetas must increase");
    if (std::abs(thetas[0]) > 1e-9 * h) throw InputError("samples must start at theta = 0");
    for (std::size_t i = 1; i < thetas.size(); ++i) {
        const double expected = h * static_cast<double>(i);
        if (std::abs(thetas[i] - expected) > 1e-6 * h) throw InputError("sample thetas are not uniform");
    }
    return decompose(values, h * static_cast<double>(thetas.size()), max_k);
}

/// Profile with one component per bin over the domain [0, Θ]. Frequencies
/// are exact rationals k/n when Θ = 2πn.
inline LogRadiusProfile reconstruct(const ShapeSpectrum& s) {
    const double turns = s.base_period / two_pi;
    const double rounded = std::round(turns);
    const bool integral_turns = rounded >= 1.0 && std::abs(turns - rounded) <= 1e-9 * rounded;
    std::vector<ElementaryComponent> comps;
    comps.reserve(s.bins.size());
    for (const auto& b : s.bins) {
        const Frequency nu = integral_turns ? Frequency::rational(b.k, static_cast<std::int64_t>(rounded))
                                            : Frequency::real(s.frequency(b.k));
        comps.emplace_back(nu, b.amplitude, b.theta0);
    }
    return {s.mean, 0.0, std::move(comps), Domain::interval(0.0, s.base_period)};
}

struct Truncation {
    ShapeSpectrum spectrum;
    /// √((Θ/2)·Σε²) over the dropped bins.
    double discarded_norm = 0.0;
};

/// Keeps the `top_j` largest-amplitude bins (ties favour lower k) and the mean.
inline Truncation truncate(const ShapeSpectrum& s, int top_j) {
    if (top_j < 1) throw InputError("top_j must be >= 1");
    std::vector<SpectralBin> order = s.bins;
    std::stable_sort(order.begin(), order.end(),
                     [](const SpectralBin& a, const SpectralBin& b) { return a.amplitude > b.amplitude; });
    const auto keep = std::min(order.size(), static_cast<std::size_t>(top_j));
    double dropped = 0.0;
    for (std::size_t i = keep; i < order.size(); ++i) dropped += order[i].amplitude * order[i].amplitude;
    order.resize(keep);
    std::sort(order.begin(), order.end(), [](const SpectralBin& a, const SpectralBin& b) { return a.k < b.k; });
    return {{s.base_period, s.mean, std::move(order)}, std::sqrt(0.5 * s.base_period * dropped)};
}

/// mean((x − c₀)²) − ½Σε²; zero when the spectrum captures all sample content.
inline double parseval_residual(std::span<const double> samples, const ShapeSpectrum& s) {
    double ms = 0.0;
    for (double v : samples) ms += (v - s.mean) * (v - s.mean);
    ms /= static_cast<double>(samples.size());
    return ms - s.energy() / s.base_period;
}

/// n uniform samples of a periodic profile over [0, Θ).
inline std::vector<double> sample_period(const LogRadiusProfile& p, std::size_t n) {
    const auto theta = period(p);
    if (!theta) throw ClosureError("profile is aperiodic; it has no spectrum");
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = p.value(*theta * static_cast<double>(j) / static_cast<double>(n));
    return out;
}

struct Detrended {
    std::vector<double> samples;  // N values over [0, Θ), linear term removed
    double slope = 0.0;
};

/// Removes a spiral term from N+1 samples over the closed interval [0, Θ],
/// estimating the slope as (l(Θ) − l(0)) / Θ.
inline Detrended detrend(std::span<const double> closed_samples, double base_period) {
    if (closed_samples.size() < 3) throw InputError("detrend needs at least 3 samples");
    const std::size_t n = closed_samples.size() - 1;
    const double slope = (closed_samples.back() - closed_samples.front()) / base_period;
    Detrended d{std::vector<double>(n), slope};
    for (std::size_t j = 0; j < n; ++j) {
        d.samples[j] = closed_samples[j] - slope * base_period * static_cast<double>(j) / static_cast<double>(n);
    }
    return d;
}

}  // namespace logradius
