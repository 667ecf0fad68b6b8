#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "angle_profile.hpp"
#include "curve.hpp"
#include "errors.hpp"
#include "profile.hpp"
#include "svg.hpp"

// Builders for the standard figure set: the elementary-shape gallery,
// scalar multiplication and addition panels, and the angle-profile
// counterexamples. Coefficients are representative choices.

namespace logradius::figures {

struct Figure {
    std::string file_name;
    std::vector<svg::StyledCurve> curves;
    svg::GridLayout layout;

    std::string to_svg() const { return svg::write_svg(curves, layout); }
};

namespace detail {

inline std::string label_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

inline svg::StyledCurve styled(const PlaneCurve& c, std::string label, std::string stroke = "#1b3a6b") {
    return {normalize(c), std::move(label), std::move(stroke), 1.5};
}

}  // namespace detail

/// Frequencies shown in the elementary-shape gallery.
inline std::vector<Frequency> gallery_frequencies() {
    return {Frequency::integer(2), Frequency::rational(3, 2), Frequency::integer(3),
            Frequency::rational(5, 2), Frequency::integer(4), Frequency::integer(5),
            Frequency::integer(6), Frequency::integer(7), Frequency::integer(8)};
}

inline Figure elementary_shapes(int samples_per_2pi = 4096, double epsilon = 0.5) {
    Figure f{"fig1_elementary_shapes.svg", {}, {3, {}, 160.0, 12.0, "Elementary shapes"}};
    for (const auto& nu : gallery_frequencies()) {
        const auto p = LogRadiusProfile::elementary(nu, epsilon);
        f.curves.push_back(detail::styled(render(p, samples_per_2pi), "ν = " + nu.to_string()));
    }
    return f;
}

inline Figure scalar_multiplication(int samples_per_2pi = 4096) {
    Figure f{"fig2a_scalar_multiplication.svg", {}, {5, {}, 130.0, 12.0, "Scalar multiplication a · Γ"}};
    const double factors[] = {0.0, 0.5, 1.0, 2.0, 3.0};
    for (int nu : {2, 3}) {
        const auto base = LogRadiusProfile::elementary(Frequency::integer(nu), 0.3);
        for (double a : factors) {
            f.curves.push_back(detail::styled(render(scalar_multiply(base, a), samples_per_2pi),
                                              "ν=" + std::to_string(nu) + ", a=" + detail::label_number(a)));
        }
    }
    return f;
}

inline Figure addition(int samples_per_2pi = 4096) {
    Figure f{"fig2b_addition.svg", {}, {3, {}, 170.0, 12.0, "Addition: spiral + ellipse"}};
    const auto spiral = LogRadiusProfile::spiral(-0.15).with_domain(Domain::interval(0.0, 3.0 * two_pi));
    const auto ellipse = LogRadiusProfile::elementary(Frequency::integer(2), 0.4);
    f.curves.push_back(detail::styled(render(spiral, samples_per_2pi), "spiral a = -0.15"));
    f.curves.push_back(detail::styled(render(ellipse, samples_per_2pi), "ellipse ν = 2, ε = 0.4"));
    f.curves.push_back(detail::styled(render(add(spiral, ellipse), samples_per_2pi), "sum: elliptic spiral"));
    return f;
}

struct AngleDemoOptions {
    int k = 3;
    std::vector<double> amplitudes{0.1, 0.4, 1.2};
    /// Two single-component profiles added in the angle domain.
    Descriptor add_first{2, 0.4, 0.0};
    Descriptor add_second{5, 0.4, 0.0};
    int samples = 4096;
};

/// Row 1: θ_k(s) = sΘ + a cos(ksΘ) across amplitudes. Row 2: two components
/// and their angle-domain sum. Row 3: log-radius shapes of the same
/// frequencies and their log-radius sum.
inline Figure angle_profile_problems(const AngleDemoOptions& o = {}) {
    Figure f{"figA1_angle_profile.svg", {}, {3, {}, 150.0, 12.0, "Angle profile shapes and addition"}};
    f.layout.row_lengths = {static_cast<int>(o.amplitudes.size()), 3, 3};
    for (double a : o.amplitudes) {
        const auto p = single_component(o.k, a);
        f.curves.push_back(detail::styled(render_from_angle(p, o.samples),
                                          "k=" + std::to_string(o.k) + ", a=" + detail::label_number(a), "#7a1f1f"));
    }

    const AngleProfile first(two_pi, {o.add_first});
    const AngleProfile second(two_pi, {o.add_second});
    const auto label = [](const Descriptor& d) {
        return "k=" + std::to_string(d.k) + ", a=" + detail::label_number(d.a);
    };
    f.curves.push_back(detail::styled(render_from_angle(first, o.samples), label(o.add_first), "#7a1f1f"));
    f.curves.push_back(detail::styled(render_from_angle(second, o.samples), label(o.add_second), "#7a1f1f"));
    f.curves.push_back(detail::styled(render_from_angle(add_angle_profiles(first, second), o.samples),
                                      "angle-domain sum", "#7a1f1f"));

    const auto l1 = LogRadiusProfile::elementary(Frequency::integer(o.add_first.k), o.add_first.a);
    const auto l2 = LogRadiusProfile::elementary(Frequency::integer(o.add_second.k), o.add_second.a);
    auto lr = [&](const LogRadiusProfile& p) { return render(p, o.samples); };
    f.curves.push_back(detail::styled(lr(l1), "ν=" + std::to_string(o.add_first.k) + ", ε=" +
                                                  detail::label_number(o.add_first.a)));
    f.curves.push_back(detail::styled(lr(l2), "ν=" + std::to_string(o.add_second.k) + ", ε=" +
                                                  detail::label_number(o.add_second.a)));
    f.curves.push_back(detail::styled(lr(add(l1, l2)), "log-radius sum"));
    return f;
}

inline std::vector<Figure> all_figures(int samples_per_2pi = 4096) {
    AngleDemoOptions angle;
    angle.samples = samples_per_2pi;
    return {elementary_shapes(samples_per_2pi), scalar_multiplication(samples_per_2pi), addition(samples_per_2pi),
            angle_profile_problems(angle)};
}

/// Writes every figure into `dir` (created if missing); returns the paths written.
inline std::vector<std::filesystem::path> regen_figures(const std::filesystem::path& dir, int samples_per_2pi = 4096) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    for (const auto& fig : all_figures(samples_per_2pi)) {
        const auto path = dir / fig.file_name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write " + path.string());
        out << fig.to_svg();
        written.push_back(path);
    }
    return written;
}

}  // namespace logradius::figures
