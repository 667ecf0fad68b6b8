#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include "errors.hpp"

namespace logradius {

/// Positive frequency of an elementary component: either an exact ratio m/n
/// (lowest terms) or a real number flagged as non-rational.
class Frequency {
public:
    static Frequency rational(std::int64_t m, std::int64_t n) {
        if (n == 0) throw InputError("frequency denominator must be nonzero");
        if (m <= 0 || n < 0) throw InputError("frequency must be positive (got " + std::to_string(m) + "/" + std::to_string(n) + ")");
        const std::int64_t g = std::gcd(m, n);
        return Frequency(m / g, n / g);
    }

    static Frequency integer(std::int64_t m) { return rational(m, 1); }

    static Frequency real(double nu) {
        if (!(nu > 0.0) || !std::isfinite(nu)) throw InputError("frequency must be a positive finite real");
        return Frequency(nu);
    }

    bool is_rational() const noexcept { return den_ != 0; }
    /// Numerator m; 0 for real frequencies.
    std::int64_t num() const noexcept { return num_; }
    /// Denominator n; 0 for real frequencies.
    std::int64_t den() const noexcept { return den_; }

    double value() const noexcept {
        return is_rational() ? static_cast<double>(num_) / static_cast<double>(den_) : real_;
    }

    /// Period of sin(ν θ): 2π n / m for rationals, 2π / ν otherwise.
    double component_period() const noexcept {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        return is_rational() ? two_pi * static_cast<double>(den_) / static_cast<double>(num_) : two_pi / real_;
    }

    std::string to_string() const {
        if (!is_rational()) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", real_);
            return buf;
        }
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Equal only when both are the same kind with the same value.
    friend bool operator==(const Frequency& a, const Frequency& b) noexcept {
        if (a.is_rational() != b.is_rational()) return false;
        return a.is_rational() ? (a.num_ == b.num_ && a.den_ == b.den_) : a.real_ == b.real_;
    }

    /// Orders by value; rationals before reals on ties.
    friend std::strong_ordering operator<=>(const Frequency& a, const Frequency& b) noexcept {
        if (a.is_rational() && b.is_rational()) {
            // m1/n1 <=> m2/n2 without rounding.
            const auto lhs = static_cast<__int128>(a.num_) * b.den_;
            const auto rhs = static_cast<__int128>(b.num_) * a.den_;
            return lhs <=> rhs;
        }
        const double va = a.value();
        const double vb = b.value();
        if (va < vb) return std::strong_ordering::less;
        if (va > vb) return std::strong_ordering::greater;
        return a.is_rational() == b.is_rational() ? std::strong_ordering::equal
               : a.is_rational()                  ? std::strong_ordering::less
                                                  : std::strong_ordering::greater;
    }

private:
    Frequency(std::int64_t m, std::int64_t n) : num_(m), den_(n) {}
    explicit Frequency(double nu) : real_(nu) {}

    std::int64_t num_ = 0;
    std::int64_t den_ = 0;
    double real_ = 0.0;
};

/// Parses "m/n", "m", or a decimal real. Integral decimals ("2", "2.0") become rationals.
inline Frequency parse_frequency(const std::string& text) {
    const auto slash = text.find('/');
    auto to_int = [&](const std::string& s) -> std::int64_t {
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw InputError("bad frequency '" + text + "'");
        }
        if (pos != s.size()) throw InputError("bad frequency '" + text + "'");
        return v;
    };
    if (slash != std::string::npos) {
        return Frequency::rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
    }
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw InputError("bad frequency '" + text + "'");
    }
    if (pos != text.size()) throw InputError("bad frequency '" + text + "'");
    if (v == std::floor(v) && std::abs(v) < 1e15) return Frequency::rational(static_cast<std::int64_t>(v), 1);
    return Frequency::real(v);
}

}  // namespace logradius
