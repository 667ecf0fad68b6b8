#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "frequency.hpp"
#include "quadrature.hpp"

namespace logradius {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Closed θ-interval [lo, hi]. Either end may be infinite.
struct Domain {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    static Domain all() noexcept { return {}; }
    static Domain interval(double lo, double hi) {
        if (!(hi > lo)) throw DomainError("domain requires hi > lo");
        return {lo, hi};
    }

    bool is_finite() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }
    bool contains(double theta) const noexcept { return theta >= lo && theta <= hi; }
    bool contains(const Domain& d) const noexcept { return d.lo >= lo && d.hi <= hi; }
    double length() const noexcept { return hi - lo; }

    friend bool operator==(const Domain&, const Domain&) = default;
};

namespace detail {

/// x reduced into [0, period).
inline double reduce_phase(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) r += period;
    if (r >= period) r = 0.0;
    return r;
}

}  // namespace detail

/// One sinusoid ε·sin(ν(θ − θ₀)) of a log-radius profile.
/// θ₀ is kept reduced into [0, 2π/ν).
class ElementaryComponent {
public:
    ElementaryComponent(Frequency nu, double epsilon, double theta0 = 0.0)
        : nu_(nu), epsilon_(epsilon), theta0_(detail::reduce_phase(theta0, nu.component_period())) {
        if (!std::isfinite(epsilon) || !std::isfinite(theta0)) throw InputError("component parameters must be finite");
    }

    const Frequency& frequency() const noexcept { return nu_; }
    double epsilon() const noexcept { return epsilon_; }
    double theta0() const noexcept { return theta0_; }

    double evaluate(double theta) const noexcept { return epsilon_ * std::sin(nu_.value() * (theta - theta0_)); }

    friend bool operator==(const ElementaryComponent&, const ElementaryComponent&) = default;

private:
    Frequency nu_;
    double epsilon_;
    double theta0_;
};

/// Log-radius profile l(θ) = c₀ + a·θ + Σ εᵢ sin(νᵢ(θ − θ₀ᵢ)) over a θ-domain.
///
/// Stored symbolically and kept in canonical form: zero-amplitude components
/// are dropped, components are sorted by (ν, θ₀), and components sharing a
/// frequency are merged into one. Two profiles describing the same function
/// through the same operations therefore compare equal with ==.
class LogRadiusProfile {
public:
    /// Unit circle on the whole real line.
    LogRadiusProfile() = default;

    LogRadiusProfile(double constant, double slope, std::vector<ElementaryComponent> components,
                     Domain domain = Domain::all())
        : constant_(constant), slope_(slope), components_(std::move(components)), domain_(domain) {
        if (!std::isfinite(constant) || !std::isfinite(slope)) throw InputError("profile terms must be finite");
        if (!(domain.hi > domain.lo)) throw DomainError("profile domain requires theta_max > theta_min");
        canonicalize();
    }

    static LogRadiusProfile unit_circle() { return {}; }
    static LogRadiusProfile constant(double c0) { return {c0, 0.0, {}}; }
    static LogRadiusProfile spiral(double slope) { return {0.0, slope, {}}; }
    static LogRadiusProfile elementary(Frequency nu, double epsilon, double theta0 = 0.0) {
        return {0.0, 0.0, {ElementaryComponent(nu, epsilon, theta0)}};
    }

    double constant() const noexcept { return constant_; }
    double slope() const noexcept { return slope_; }
    std::span<const ElementaryComponent> components() const noexcept { return components_; }
    const Domain& domain() const noexcept { return domain_; }

    LogRadiusProfile with_domain(Domain d) const { return {constant_, slope_, components_, d}; }

    /// All terms zero (the unit circle), regardless of domain.
    bool is_zero() const noexcept { return constant_ == 0.0 && slope_ == 0.0 && components_.empty(); }

    /// l(θ) without any domain check.
    double value(double theta) const noexcept {
        double l = constant_ + slope_ * theta;
        for (const auto& c : components_) l += c.evaluate(theta);
        return l;
    }

    friend bool operator==(const LogRadiusProfile&, const LogRadiusProfile&) = default;

private:
    void canonicalize();

    double constant_ = 0.0;
    double slope_ = 0.0;
    std::vector<ElementaryComponent> components_;
    Domain domain_;
};

namespace detail {

/// Collapses same-frequency components [first, last) into at most one.
inline std::optional<ElementaryComponent> merge_group(std::span<const ElementaryComponent> group) {
    if (group.size() == 1) return group.front();
    const Frequency nu = group.front().frequency();
    const bool same_phase = std::all_of(group.begin(), group.end(),
                                        [&](const auto& c) { return c.theta0() == group.front().theta0(); });
    if (same_phase) {
        double eps = 0.0;
        for (const auto& c : group) eps += c.epsilon();
        if (eps == 0.0) return std::nullopt;
        return ElementaryComponent(nu, eps, group.front().theta0());
    }
    // ε sin(νθ − φ) = ε cos φ · sin νθ − ε sin φ · cos νθ; sum the quadratures.
    double s = 0.0;
    double c = 0.0;
    double scale = 0.0;
    for (const auto& comp : group) {
        const double phi = nu.value() * comp.theta0();
        s += comp.epsilon() * std::cos(phi);
        c += comp.epsilon() * std::sin(phi);
        scale += std::abs(comp.epsilon());
    }
    const double eps = std::hypot(s, c);
    if (eps <= 4.0 * std::numeric_limits<double>::epsilon() * scale) return std::nullopt;
    return ElementaryComponent(nu, eps, std::atan2(c, s) / nu.value());
}

inline bool component_less(const ElementaryComponent& a, const ElementaryComponent& b) {
    if (auto o = a.frequency() <=> b.frequency(); o != 0) return o < 0;
    if (a.theta0() != b.theta0()) return a.theta0() < b.theta0();
    return a.epsilon() < b.epsilon();
}

}  // namespace detail

inline void LogRadiusProfile::canonicalize() {
    std::erase_if(components_, [](const ElementaryComponent& c) { return c.epsilon() == 0.0; });
    std::sort(components_.begin(), components_.end(), detail::component_less);

    std::vector<ElementaryComponent> merged;
    merged.reserve(components_.size());
    std::span<const ElementaryComponent> all(components_);
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i + 1;
        while (j < all.size() && all[j].frequency() == all[i].frequency()) ++j;
        if (auto c = detail::merge_group(all.subspan(i, j - i))) merged.push_back(*c);
        i = j;
    }
    components_ = std::move(merged);
}

// ---------------------------------------------------------------------------
// Evaluation

enum class Extension {
    none,      ///< θ must lie in the domain.
    periodic,  ///< θ may lie anywhere if the profile is periodic.
};

/// Number of 2π turns L in the profile's period Θ = 2πL, or nullopt when the
/// profile is aperiodic (nonzero slope or an irrational frequency).
inline std::optional<std::int64_t> period_turns(const LogRadiusProfile& p) {
    if (p.slope() != 0.0) return std::nullopt;
    std::int64_t l = 1;
    for (const auto& c : p.components()) {
        if (!c.frequency().is_rational()) return std::nullopt;
        l = std::lcm(l, c.frequency().den());
    }
    return l;
}

/// Period Θ = 2π·lcm(nᵢ); nullopt when aperiodic.
inline std::optional<double> period(const LogRadiusProfile& p) {
    if (auto l = period_turns(p)) return two_pi * static_cast<double>(*l);
    return std::nullopt;
}

/// Relative tolerance of the numeric branch of closes().
inline constexpr double closure_integral_tolerance = 1e-9;

/// Whether the curve returns to its start after one period Θ, i.e. whether
/// ∫₀^Θ r(θ)e^{iθ}dθ vanishes.
///
/// With N = lcm(nᵢ) and νᵢ = pᵢ/N, that integral picks out the frequency-N
/// content of r, which lies on the lattice gcd(pᵢ)·ℤ. When N is off the
/// lattice the curve closes exactly (a single component with m > 1). When it
/// is on the lattice the integral is generically nonzero (m = 1 translates),
/// but tuned mixtures can still close, so that case is decided numerically:
/// |∫ r e^{iθ}| ≤ closure_integral_tolerance · ∫ r, using the periodic
/// trapezoid rule (spectrally accurate over a full period).
inline bool closes(const LogRadiusProfile& p) {
    const auto turns = period_turns(p);
    if (!turns) return false;
    std::int64_t g = 0;
    for (const auto& c : p.components()) {
        g = std::gcd(g, c.frequency().num() * (*turns / c.frequency().den()));
    }
    if (g == 0 || (*turns % g) != 0) return true;

    const std::int64_t n = 4096 * *turns;
    const double h = two_pi * static_cast<double>(*turns) / static_cast<double>(n);
    double x = 0.0, y = 0.0, len = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
        const double t = h * static_cast<double>(j);
        const double r = std::exp(p.value(t));
        x += r * std::cos(t);
        y += r * std::sin(t);
        len += r;
    }
    return std::hypot(x, y) <= closure_integral_tolerance * len;
}

inline double evaluate(const LogRadiusProfile& p, double theta, Extension ext = Extension::none) {
    if (!p.domain().contains(theta)) {
        if (ext == Extension::none) throw DomainError("theta " + std::to_string(theta) + " outside profile domain");
        if (!period_turns(p)) throw DomainError("period extension requested for an aperiodic profile");
    }
    return p.value(theta);
}

/// r(θ) = exp(l(θ)).
inline double radius(const LogRadiusProfile& p, double theta, Extension ext = Extension::none) {
    return std::exp(evaluate(p, theta, ext));
}

// ---------------------------------------------------------------------------
// Vector-space operations

inline LogRadiusProfile scalar_multiply(const LogRadiusProfile& p, double a) {
    std::vector<ElementaryComponent> comps;
    comps.reserve(p.components().size());
    for (const auto& c : p.components()) comps.emplace_back(c.frequency(), a * c.epsilon(), c.theta0());
    return {a * p.constant(), a * p.slope(), std::move(comps), p.domain()};
}

/// Pointwise sum of log-radius profiles over the intersection of their domains.
inline LogRadiusProfile add(const LogRadiusProfile& p1, const LogRadiusProfile& p2) {
    const Domain d{std::max(p1.domain().lo, p2.domain().lo), std::min(p1.domain().hi, p2.domain().hi)};
    if (!(d.hi > d.lo)) throw DisjointDomainError("profile domains do not overlap");
    std::vector<ElementaryComponent> comps(p1.components().begin(), p1.components().end());
    comps.insert(comps.end(), p2.components().begin(), p2.components().end());
    return {p1.constant() + p2.constant(), p1.slope() + p2.slope(), std::move(comps), d};
}

inline LogRadiusProfile operator+(const LogRadiusProfile& a, const LogRadiusProfile& b) { return add(a, b); }
inline LogRadiusProfile operator*(double a, const LogRadiusProfile& p) { return scalar_multiply(p, a); }
inline LogRadiusProfile operator-(const LogRadiusProfile& p) { return scalar_multiply(p, -1.0); }
inline LogRadiusProfile operator-(const LogRadiusProfile& a, const LogRadiusProfile& b) { return add(a, -b); }

// ---------------------------------------------------------------------------
// Hilbert structure

/// Integration interval for inner products: the common period when both
/// profiles are periodic, starting at the shared finite lower bound (or 0).
inline Domain default_interval(const LogRadiusProfile& p1, const LogRadiusProfile& p2) {
    const auto l1 = period_turns(p1);
    const auto l2 = period_turns(p2);
    if (!l1 || !l2) throw DomainError("inner product of aperiodic profiles needs an explicit interval");
    const double theta = two_pi * static_cast<double>(std::lcm(*l1, *l2));
    double lo = std::max(p1.domain().lo, p2.domain().lo);
    if (!std::isfinite(lo)) lo = 0.0;
    return {lo, lo + theta};
}

/// ∫_I l₁(θ) l₂(θ) dθ by composite Simpson, `panels_per_2pi` panels per 2π of |I|.
inline double inner_product(const LogRadiusProfile& p1, const LogRadiusProfile& p2, std::optional<Domain> interval = {},
                            int panels_per_2pi = quadrature::default_panels_per_2pi) {
    const Domain iv = interval ? *interval : default_interval(p1, p2);
    if (!(iv.hi > iv.lo) || !iv.is_finite()) throw DomainError("inner product interval must be finite and non-empty");
    if (!p1.domain().contains(iv) || !p2.domain().contains(iv)) {
        throw DomainError("inner product interval lies outside a profile domain");
    }
    if (panels_per_2pi < 2) throw InputError("panels_per_2pi must be >= 2");
    const auto n = quadrature::panel_count(iv.lo, iv.hi, panels_per_2pi);
    return quadrature::simpson([&](double t) { return p1.value(t) * p2.value(t); }, iv.lo, iv.hi, n);
}

inline double norm(const LogRadiusProfile& p, std::optional<Domain> interval = {},
                   int panels_per_2pi = quadrature::default_panels_per_2pi) {
    return std::sqrt(std::max(0.0, inner_product(p, p, interval, panels_per_2pi)));
}

// ---------------------------------------------------------------------------

/// (a/ν)·sin(νθ), which tends to the logarithmic spiral aθ as ν → 0.
/// ν = 0 returns the spiral itself.
inline LogRadiusProfile spiral_limit_profile(double a, double nu) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw InputError("spiral_limit_profile requires nu >= 0");
    if (nu == 0.0) return LogRadiusProfile::spiral(a);
    const Frequency f = (nu == std::floor(nu) && nu < 1e15) ? Frequency::integer(static_cast<std::int64_t>(nu))
                                                             : Frequency::real(nu);
    return LogRadiusProfile::elementary(f, a / nu);
}

}  // namespace logradius
