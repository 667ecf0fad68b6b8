// logradius: command-line frontend for building, mixing, rendering and
// analysing log-radius profiles.
//
// Exit codes: 0 success, 1 other failure, 2 input or parse error,
// 3 numeric range error, 4 representability error (convexity, closure,
// aperiodic input).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <logradius/logradius.hpp>

namespace fs = std::filesystem;
namespace lr = logradius;

namespace {

constexpr int exit_other = 1;
constexpr int exit_input = 2;
constexpr int exit_range = 3;
constexpr int exit_representability = 4;

constexpr const char* defaults_footer =
    "Defaults: samples_per_2pi = 4096, max_k = 32, closure tolerance = 1e-6.\n"
    "Relative output paths are placed under $LOGRADIUS_OUT_DIR when it is set.";

fs::path output_path(const std::string& name) {
    fs::path p(name);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("LOGRADIUS_OUT_DIR"); dir && *dir) p = fs::path(dir) / p;
    }
    return p;
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lr::InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    const auto p = output_path(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw lr::Error("cannot write '" + p.string() + "'");
    out << text;
}

std::string num(double v) { return lr::io::format_number(v); }

std::optional<lr::Domain> window_of(const std::optional<double>& lo, const std::optional<double>& hi) {
    if (!lo && !hi) return std::nullopt;
    constexpr double inf = std::numeric_limits<double>::infinity();
    return lr::Domain{lo.value_or(-inf), hi.value_or(inf)};
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string nu = "0";
    double eps = 0.0;
    double theta0 = 0.0;
    double constant = 0.0;
    double slope = 0.0;
    std::optional<double> theta_min, theta_max;
    std::string out = "-";
};

int run_gen(const GenArgs& a) {
    lr::LogRadiusProfile p(a.constant, a.slope, {});
    char* end = nullptr;
    const double nu_value = std::strtod(a.nu.c_str(), &end);
    const bool zero_nu = end && *end == '\0' && nu_value == 0.0;
    if (!zero_nu) {
        const auto nu = lr::parse_frequency(a.nu);
        p = p + lr::LogRadiusProfile::elementary(nu, a.eps, a.theta0);
    }
    if (auto d = window_of(a.theta_min, a.theta_max)) p = p.with_domain(*d);
    write_text(a.out, lr::io::write_profile(p));
    return 0;
}

struct MixArgs {
    std::vector<std::string> inputs;
    std::string out = "-";
};

int run_mix(const MixArgs& a) {
    if (a.inputs.empty()) throw lr::InputError("mix needs at least one input");
    std::optional<lr::LogRadiusProfile> acc;
    for (const auto& item : a.inputs) {
        std::string path = item;
        double weight = 1.0;
        if (const auto colon = item.rfind(':'); colon != std::string::npos && colon > 0) {
            const std::string w = item.substr(colon + 1);
            char* end = nullptr;
            const double v = std::strtod(w.c_str(), &end);
            if (w.empty() || *end != '\0' || !std::isfinite(v)) throw lr::InputError("bad weight in '" + item + "'");
            path = item.substr(0, colon);
            weight = v;
        }
        const auto term = weight * lr::io::read_profile(read_text(path));
        acc = acc ? lr::add(*acc, term) : term;
    }
    write_text(a.out, lr::io::write_profile(*acc));
    return 0;
}

struct RenderArgs {
    std::string input;
    bool gallery = false;
    int samples = 4096;
    double closure_tol = lr::default_closure_tolerance;
    std::optional<double> theta_min, theta_max;
    std::string svg;
    std::string csv;
};

int run_render(const RenderArgs& a) {
    if (a.gallery) {
        if (!a.input.empty()) throw lr::InputError("--gallery takes no input profile");
        write_text(a.svg.empty() ? "-" : a.svg, lr::figures::elementary_shapes(a.samples).to_svg());
        return 0;
    }
    if (a.input.empty()) throw lr::InputError("render needs an input profile or --gallery");
    const auto p = lr::io::read_profile(read_text(a.input));
    lr::RenderOptions opts;
    opts.samples_per_2pi = a.samples;
    opts.closure_tolerance = a.closure_tol;
    opts.window = window_of(a.theta_min, a.theta_max);
    if (opts.window && !(opts.window->is_finite() && opts.window->hi > opts.window->lo)) {
        throw lr::InputError("render window needs finite theta_min < theta_max");
    }
    const auto window = lr::render_window(p, opts);
    const auto curve = lr::normalize(lr::render(p, opts));

    const std::string label = fs::path(a.input).stem().string();
    const std::vector<lr::svg::StyledCurve> items{{curve, label == "-" ? "" : label}};
    lr::svg::GridLayout layout;
    layout.columns = 1;
    layout.cell = 320.0;
    if (!a.csv.empty()) write_text(a.csv, lr::io::write_curve_csv(curve));
    if (!a.svg.empty() || a.csv.empty()) write_text(a.svg.empty() ? "-" : a.svg, lr::svg::write_svg(items, layout));

    std::fprintf(stderr, "theta = [%s, %s]\nclosure_gap = %s\nclosed = %s\n", num(window.lo).c_str(),
                 num(window.hi).c_str(), num(lr::closure_gap(curve)).c_str(), curve.closed() ? "yes" : "no");
    return 0;
}

struct SpectrumArgs {
    std::string input;
    int max_k = 32;
    int samples = 4096;
    std::optional<int> top_j;
    std::string out;
};

int run_spectrum(const SpectrumArgs& a) {
    if (a.max_k < 1) throw lr::InputError("--max-k must be at least 1");
    const auto text = read_text(a.input);
    std::vector<double> samples;
    lr::ShapeSpectrum shape_spectrum;
    if (text.rfind("theta,l", 0) == 0) {
        auto cols = lr::io::read_samples_csv(text);
        shape_spectrum = lr::decompose_sampled(cols.thetas, cols.values, a.max_k);
        samples = std::move(cols.values);
    } else {
        const auto p = lr::io::read_profile(text);
        const auto turns = lr::period_turns(p);
        if (!turns) throw lr::ClosureError("profile is aperiodic; spectrum needs a periodic profile");
        const auto n = static_cast<std::size_t>(a.samples) * static_cast<std::size_t>(*turns);
        samples = lr::sample_period(p, n);
        shape_spectrum = lr::decompose(samples, lr::two_pi * static_cast<double>(*turns), a.max_k);
    }
    const double residual = lr::parseval_residual(samples, shape_spectrum);

    std::optional<double> discarded;
    if (a.top_j) {
        auto t = lr::truncate(shape_spectrum, *a.top_j);
        shape_spectrum = std::move(t.spectrum);
        discarded = t.discarded_norm;
    }

    std::string report;
    report += "base_period = " + num(shape_spectrum.base_period) + "\n";
    report += "mean = " + num(shape_spectrum.mean) + "\n";
    report += "bins = " + std::to_string(shape_spectrum.bins.size()) + "\n";
    report += "k,nu,epsilon,theta0\n";
    const auto turns = static_cast<std::int64_t>(std::llround(shape_spectrum.base_period / lr::two_pi));
    for (const auto& b : shape_spectrum.bins) {
        const auto nu = lr::Frequency::rational(b.k, turns);
        report += std::to_string(b.k) + "," + nu.to_string() + "," + num(b.amplitude) + "," + num(b.theta0) + "\n";
    }
    report += "parseval_residual = " + num(residual) + "\n";
    if (discarded) report += "discarded_norm = " + num(*discarded) + "\n";
    std::cout << report;

    if (!a.out.empty()) write_text(a.out, lr::io::write_profile(lr::reconstruct(shape_spectrum)));
    return 0;
}

struct AngleDemoArgs {
    int k = 3;
    std::vector<double> amplitudes{0.1, 0.4, 1.2};
    int samples = 4096;
    std::string out = "-";
};

int run_angle_demo(const AngleDemoArgs& a) {
    if (a.k < 1) throw lr::InputError("--k must be at least 1");
    if (a.amplitudes.empty()) throw lr::InputError("--amplitudes needs at least one value");
    lr::figures::AngleDemoOptions o;
    o.k = a.k;
    o.amplitudes = a.amplitudes;
    o.samples = a.samples;
    const auto fig = lr::figures::angle_profile_problems(o);
    write_text(a.out, fig.to_svg());
    for (double amp : a.amplitudes) {
        const double m = lr::convexity_margin(lr::single_component(a.k, amp), std::max(a.samples, 64));
        std::fprintf(stderr, "k=%d a=%s margin=%s\n", a.k, num(amp).c_str(), num(m).c_str());
    }
    return 0;
}

struct ConvertArgs {
    std::string input;
    std::string to;
    int samples = 4096;
    int max_k = 32;
    std::string out = "-";
};

int run_convert(const ConvertArgs& a) {
    const auto text = read_text(a.input);
    const auto kind = lr::io::document_kind(text);
    std::string to = a.to;
    if (to.empty()) to = kind == lr::io::DocumentKind::angle_profile ? "logradius" : "angle";
    if (to == "angle") {
        if (kind != lr::io::DocumentKind::log_radius_profile) throw lr::InputError("input is not a log-radius profile");
        const auto p = lr::io::read_profile(text);
        const auto turns = lr::period_turns(p);
        const int n = a.samples * static_cast<int>(turns.value_or(1));
        const auto conv = lr::logradius_to_angle_detailed(p, n, a.max_k);
        write_text(a.out, lr::io::write_angle_profile(conv.profile));
        std::fprintf(stderr, "arc_length = %s\nrotation = %s\nconvexity_margin = %s\n", num(conv.arc_length).c_str(),
                     num(conv.rotation).c_str(), num(lr::convexity_margin(conv.profile, std::max(n, 64))).c_str());
    } else if (to == "logradius") {
        if (kind != lr::io::DocumentKind::angle_profile) throw lr::InputError("input is not an angle profile");
        const auto p = lr::io::read_angle_profile(text);
        const auto turns = std::max<long long>(1, std::llround(p.total_turn() / lr::two_pi));
        const auto sampled = lr::angle_to_logradius(p, a.samples * static_cast<int>(turns));
        const auto shape_spectrum = lr::decompose(sampled.samples, sampled.base_period, a.max_k);
        write_text(a.out, lr::io::write_profile(lr::reconstruct(shape_spectrum)));
    } else {
        throw lr::InputError("--to must be 'angle' or 'logradius'");
    }
    return 0;
}

struct RegenArgs {
    std::string dir;
    int samples = 4096;
};

int run_regen(const RegenArgs& a) {
    fs::path dir = a.dir;
    if (dir.empty()) {
        const char* env = std::getenv("LOGRADIUS_OUT_DIR");
        dir = env && *env ? fs::path(env) : fs::path("figures");
    } else {
        dir = output_path(a.dir);
    }
    for (const auto& p : lr::figures::regen_figures(dir, a.samples)) std::cout << p.string() << "\n";
    return 0;
}

void check_samples(int samples) {
    if (samples < 16) throw lr::InputError("--samples must be at least 16");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Log-radius profile toolkit: build, mix, render and analyse convex plane curves."};
    app.footer(defaults_footer);
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a profile c0 + slope*theta + eps*sin(nu*(theta - theta0))");
    gen_cmd->add_option("--nu", gen.nu, "Frequency: m/n, integer, or real (0 for none)")->capture_default_str();
    gen_cmd->add_option("--eps", gen.eps, "Amplitude epsilon")->capture_default_str();
    gen_cmd->add_option("--theta0", gen.theta0, "Phase theta0")->capture_default_str();
    gen_cmd->add_option("--constant", gen.constant, "Constant term c0 (log of scale)")->capture_default_str();
    gen_cmd->add_option("--slope", gen.slope, "Linear term a (spiral growth)")->capture_default_str();
    gen_cmd->add_option("--theta-min", gen.theta_min, "Domain lower bound (default -inf)");
    gen_cmd->add_option("--theta-max", gen.theta_max, "Domain upper bound (default inf)");
    gen_cmd->add_option("-o,--out", gen.out, "Output profile document ('-' for stdout)")->capture_default_str();
    gen_cmd->footer(defaults_footer);

    MixArgs mix;
    auto* mix_cmd = app.add_subcommand("mix", "Write the weighted sum of profiles");
    mix_cmd->add_option("inputs", mix.inputs, "Profiles as PATH or PATH:WEIGHT (weight 1 if omitted)")->required();
    mix_cmd->add_option("-o,--out", mix.out, "Output profile document ('-' for stdout)")->capture_default_str();
    mix_cmd->footer(defaults_footer);

    RenderArgs render;
    auto* render_cmd = app.add_subcommand("render", "Render a profile to a size-normalized SVG and/or CSV");
    render_cmd->add_option("input", render.input, "Profile document ('-' for stdin)");
    render_cmd->add_flag("--gallery", render.gallery, "Render the gallery of elementary shapes instead");
    render_cmd->add_option("--samples", render.samples, "Samples per 2*pi")->capture_default_str();
    render_cmd->add_option("--closure-tol", render.closure_tol, "Gap below which the curve counts as closed")
        ->capture_default_str();
    render_cmd->add_option("--theta-min", render.theta_min, "Render window start");
    render_cmd->add_option("--theta-max", render.theta_max, "Render window end");
    render_cmd->add_option("--svg", render.svg, "SVG output path (stdout when neither --svg nor --csv)");
    render_cmd->add_option("--csv", render.csv, "CSV output path (theta,s,x,y)");
    render_cmd->footer(defaults_footer);

    SpectrumArgs spectrum;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the harmonic decomposition of a periodic profile");
    spectrum_cmd->add_option("input", spectrum.input, "Profile document or theta,l samples CSV")->required();
    spectrum_cmd->add_option("--max-k", spectrum.max_k, "Highest harmonic index")->capture_default_str();
    spectrum_cmd->add_option("--samples", spectrum.samples, "Samples per 2*pi when sampling a profile")
        ->capture_default_str();
    spectrum_cmd->add_option("--top-j", spectrum.top_j, "Keep only the J largest bins");
    spectrum_cmd->add_option("-o,--out", spectrum.out, "Also write the reconstructed profile here");
    spectrum_cmd->footer(defaults_footer);

    AngleDemoArgs demo;
    auto* demo_cmd = app.add_subcommand("angle-demo", "SVG of single-harmonic angle profiles and angle-domain addition");
    demo_cmd->add_option("--k", demo.k, "Harmonic index")->capture_default_str();
    demo_cmd->add_option("--amplitudes", demo.amplitudes, "Amplitudes a_k, one shape each")->capture_default_str()
        ->delimiter(',');
    demo_cmd->add_option("--samples", demo.samples, "Samples per curve")->capture_default_str();
    demo_cmd->add_option("-o,--out", demo.out, "SVG output ('-' for stdout)")->capture_default_str();
    demo_cmd->footer(defaults_footer);

    ConvertArgs convert;
    auto* convert_cmd = app.add_subcommand("convert", "Convert between log-radius and angle profile documents");
    convert_cmd->add_option("input", convert.input, "Input document")->required();
    convert_cmd->add_option("--to", convert.to, "Target: angle or logradius (default: the other one)")
        ->check(CLI::IsMember({"angle", "logradius"}));
    convert_cmd->add_option("--samples", convert.samples, "Samples per 2*pi")->capture_default_str();
    convert_cmd->add_option("--max-k", convert.max_k, "Highest harmonic index kept")->capture_default_str();
    convert_cmd->add_option("-o,--out", convert.out, "Output document ('-' for stdout)")->capture_default_str();
    convert_cmd->footer(defaults_footer);

    RegenArgs regen;
    auto* regen_cmd = app.add_subcommand("regen-figures", "Write every gallery figure as SVG into a directory");
    regen_cmd->add_option("dir", regen.dir, "Target directory (default $LOGRADIUS_OUT_DIR or ./figures)");
    regen_cmd->add_option("--samples", regen.samples, "Samples per 2*pi")->capture_default_str();
    regen_cmd->footer(defaults_footer);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*mix_cmd) return run_mix(mix);
        if (*render_cmd) return check_samples(render.samples), run_render(render);
        if (*spectrum_cmd) return check_samples(spectrum.samples), run_spectrum(spectrum);
        if (*demo_cmd) return check_samples(demo.samples), run_angle_demo(demo);
        if (*convert_cmd) return check_samples(convert.samples), run_convert(convert);
        if (*regen_cmd) return check_samples(regen.samples), run_regen(regen);
    } catch (const lr::ConvexityError& e) {
        std::fprintf(stderr, "error: %s\nconvexity_margin = %s\n", e.what(), num(e.margin()).c_str());
        return exit_representability;
    } catch (const lr::RepresentabilityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_representability;
    } catch (const lr::NumericRangeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_range;
    } catch (const lr::InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_input;
    } catch (const lr::DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_input;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_other;
    }
    return exit_other;
}
