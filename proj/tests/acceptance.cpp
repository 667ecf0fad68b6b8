// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <logradius/logradius.hpp>

#include "test_support.hpp"

namespace fs = std::filesystem;
namespace lr = logradius;
using lr::Frequency;
using lr::LogRadiusProfile;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;  // 0: no runtime limit
    std::function<Outcome()> check;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Every (m, n) with 2 <= m <= 7, 1 <= n <= 4, gcd 1.
std::vector<Frequency> closing_set() {
    std::vector<Frequency> out;
    for (int m = 2; m <= 7; ++m)
        for (int n = 1; n <= 4; ++n)
            if (std::gcd(m, n) == 1) out.push_back(Frequency::rational(m, n));
    return out;
}

lr::PlaneCurve render_full_period(const Frequency& nu, double eps) {
    const auto p = LogRadiusProfile::elementary(nu, eps);
    lr::RenderOptions o;
    o.samples_per_2pi = 4096;
    o.window = lr::Domain::interval(0.0, 2 * pi * static_cast<double>(nu.den()));
    return lr::render(p, o);
}

// 1 ------------------------------------------------------------------------
Outcome vector_space_axioms() {
    std::mt19937_64 rng(1001);
    std::vector<LogRadiusProfile> ps;
    for (int i = 0; i < 200; ++i) ps.push_back(lr::testing::random_profile(rng));
    std::uniform_real_distribution<double> scalar(-3.0, 3.0);
    std::uniform_real_distribution<double> angle(-4 * pi, 4 * pi);
    std::vector<double> thetas(100);
    for (auto& t : thetas) t = angle(rng);

    const auto circle = LogRadiusProfile::unit_circle();
    int exact_failures = 0, close_failures = 0;
    double worst = 0.0;
    auto pointwise = [&](const LogRadiusProfile& x, const LogRadiusProfile& y) {
        for (double t : thetas) worst = std::max(worst, std::abs(x.value(t) - y.value(t)));
    };
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto& a = ps[i];
        const auto& b = ps[(i + 1) % ps.size()];
        const auto& c = ps[(i + 7) % ps.size()];
        const double s = scalar(rng), u = scalar(rng);

        // Exact at the structural level.
        exact_failures += !(a + b == b + a);
        exact_failures += !(a + circle == a);
        exact_failures += !(a + (-a) == circle);
        exact_failures += !(1.0 * a == a);
        // Rounding-level agreement of stored coefficients.
        close_failures += !lr::testing::structurally_close((a + b) + c, a + (b + c), 1e-12);
        close_failures += !lr::testing::structurally_close(s * (a + b), s * a + s * b, 1e-12);
        close_failures += !lr::testing::structurally_close((s + u) * a, s * a + u * a, 1e-12);
        close_failures += !lr::testing::structurally_close(s * (u * a), (s * u) * a, 1e-12);

        pointwise(a + b, b + a);
        pointwise((a + b) + c, a + (b + c));
        pointwise(s * (a + b), s * a + s * b);
        pointwise((s + u) * a, s * a + u * a);
        pointwise(a + (-a), circle);
        for (double t : thetas) worst = std::max(worst, std::abs((a + b).value(t) - (a.value(t) + b.value(t))));
        for (double t : thetas) worst = std::max(worst, std::abs((s * a).value(t) - s * a.value(t)));
    }
    return {exact_failures == 0 && close_failures == 0 && worst <= 1e-12,
            "exact failures " + std::to_string(exact_failures) + ", structural(1e-12) failures " +
                std::to_string(close_failures) + ", max pointwise " + fmt(worst)};
}

// 2 ------------------------------------------------------------------------
Outcome closure_theorem() {
    bool pass = true;
    double worst_closed = 0.0;
    std::string detail;
    for (const auto& nu : closing_set()) {
        const double gap = lr::closure_gap(render_full_period(nu, 0.3));
        worst_closed = std::max(worst_closed, gap);
        if (!(gap < 1e-6)) {
            pass = false;
            detail += " nu=" + nu.to_string() + " gap " + fmt(gap) + ";";
        }
    }
    for (const auto& nu : {Frequency::rational(1, 2), Frequency::rational(1, 3)}) {
        const double gap = lr::closure_gap(render_full_period(nu, 0.3));
        const bool ok = gap > 1e-2;
        pass = pass && ok;
        detail += " nu=" + nu.to_string() + " gap " + fmt(gap) + (ok ? " (>1e-2)" : " (NOT >1e-2)") + ";";
    }
    return {pass, "max closed gap " + fmt(worst_closed) + ";" + detail};
}

// 3 ------------------------------------------------------------------------
Outcome rotational_symmetry() {
    bool pass = true;
    double worst_at_m = 0.0;
    double least_at_m1 = 1.0;
    std::string misses;
    for (const auto& nu : closing_set()) {
        const auto curve = render_full_period(nu, 0.3);
        const int m = static_cast<int>(nu.num());
        const double at_m = lr::rotational_symmetry_error(curve, m);
        const double at_m1 = lr::rotational_symmetry_error(curve, m + 1);
        worst_at_m = std::max(worst_at_m, at_m);
        least_at_m1 = std::min(least_at_m1, at_m1);
        if (!(at_m < 1e-4)) {
            pass = false;
            misses += " nu=" + nu.to_string() + " err(m) " + fmt(at_m) + ";";
        }
        if (!(at_m1 > 1e-2)) {
            pass = false;
            misses += " nu=" + nu.to_string() + " err(m+1) " + fmt(at_m1) + ";";
        }
    }
    return {pass, "max err(m) " + fmt(worst_at_m) + ", min err(m+1) " + fmt(least_at_m1) + ";" + misses};
}

// 4 ------------------------------------------------------------------------
Outcome spiral_limit() {
    bool pass = true;
    std::string detail;
    const double a = 1.0;
    for (double nu : {1e-2, 1e-3}) {
        const auto approx = lr::spiral_limit_profile(a, nu);
        const auto spiral = LogRadiusProfile::spiral(a);
        double worst = 0.0;
        const int n = 100000;
        for (int i = 0; i <= n; ++i) {
            const double t = 2 * pi * i / n;
            worst = std::max(worst, std::abs(approx.value(t) - spiral.value(t)));
        }
        const double bound = a * nu * nu * std::pow(2 * pi, 3) / 6.0;
        pass = pass && worst <= bound;
        detail += " nu=" + fmt(nu) + ": " + fmt(worst) + " <= " + fmt(bound) + ";";
    }
    return {pass, detail};
}

// 5 ------------------------------------------------------------------------
Outcome hilbert_structure() {
    std::vector<Frequency> freqs;
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 4; ++n)
            if (std::gcd(m, n) == 1) freqs.push_back(Frequency::rational(m, n));
    std::mt19937_64 rng(1005);
    std::uniform_real_distribution<double> phase(0.0, 2 * pi);
    double worst_ortho = 0.0;
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        for (std::size_t j = i + 1; j < freqs.size(); ++j) {
            const auto p = LogRadiusProfile::elementary(freqs[i], 1.0, phase(rng));
            const auto q = LogRadiusProfile::elementary(freqs[j], 1.0, phase(rng));
            worst_ortho = std::max(worst_ortho, std::abs(lr::inner_product(p, q)));
        }
    }

    lr::testing::RandomProfileOptions o;
    o.max_slope = 0.0;
    o.max_den = 4;
    double worst_parseval = 0.0;
    int made = 0;
    while (made < 50) {
        const auto p = lr::testing::random_profile(rng, o);
        if (p.components().size() < 2) continue;
        ++made;
        const double theta = *lr::period(p);
        double expected = theta * p.constant() * p.constant();
        for (const auto& c : p.components()) expected += 0.5 * theta * c.epsilon() * c.epsilon();
        const double got = lr::inner_product(p, p);
        worst_parseval = std::max(worst_parseval, std::abs(got - expected) / expected);
    }
    return {worst_ortho <= 1e-8 && worst_parseval <= 1e-6,
            "max |<p,q>| " + fmt(worst_ortho) + " over " + std::to_string(freqs.size() * (freqs.size() - 1) / 2) +
                " pairs; max Parseval rel " + fmt(worst_parseval)};
}

// 6 ------------------------------------------------------------------------
Outcome spectrum_round_trip() {
    std::mt19937_64 rng(1006);
    lr::testing::RandomProfileOptions o;
    o.max_slope = 0.0;
    o.max_den = 4;
    std::uniform_real_distribution<double> angle(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto p = lr::testing::random_profile(rng, o);
        const auto turns = *lr::period_turns(p);
        const double theta = 2 * pi * static_cast<double>(turns);
        int max_k = 1;
        for (const auto& c : p.components()) {
            max_k = std::max<int>(max_k, static_cast<int>(c.frequency().num() * turns / c.frequency().den()));
        }
        const auto n = static_cast<std::size_t>(4 * (2 * max_k + 1));
        const auto samples = lr::sample_period(p, n);
        const auto back = lr::reconstruct(lr::decompose(samples, theta, max_k));
        for (int j = 0; j < 200; ++j) {
            const double t = theta * angle(rng);
            worst = std::max(worst, std::abs(back.value(t) - p.value(t)));
        }
    }
    return {worst <= 1e-8, "max pointwise " + fmt(worst) + " (4x oversampling)"};
}

// 7 ------------------------------------------------------------------------
// Convex closed curves turn once, so the draws use integer frequencies.
Outcome duality_round_trip() {
    std::mt19937_64 rng(1007);
    std::uniform_int_distribution<int> count(1, 3), num(2, 6);
    std::uniform_real_distribution<double> eps(-0.15, 0.15), phase(0.0, 2 * pi), unit(0.0, 1.0);
    double worst = 0.0, least_margin = 1e300;
    int made = 0, rejected_open = 0;
    while (made < 50) {
        std::vector<lr::ElementaryComponent> comps;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) comps.emplace_back(Frequency::integer(num(rng)), eps(rng), phase(rng));
        const LogRadiusProfile p(eps(rng), 0.0, std::move(comps));
        if (!lr::closes(p)) {
            ++rejected_open;
            continue;
        }
        ++made;
        const auto turns = *lr::period_turns(p);
        const int samples = 4096 * static_cast<int>(turns);
        const auto conv = lr::logradius_to_angle_detailed(p, samples, 48 * static_cast<int>(turns));
        least_margin = std::min(least_margin, lr::convexity_margin(conv.profile, samples));
        // angle_to_logradius checks the margin itself and throws when it fails.
        const auto back = lr::angle_to_logradius(conv.profile, samples);
        const auto rebuilt = lr::reconstruct(lr::decompose(back.samples, back.base_period, 64 * static_cast<int>(turns)));
        for (int j = 0; j < 200; ++j) {
            const double t = back.base_period * unit(rng);
            worst = std::max(worst, std::abs(rebuilt.value(t) + std::log(conv.arc_length) - p.value(t + conv.rotation)));
        }
    }
    return {worst <= 1e-5 && least_margin > 0.0,
            "max pointwise " + fmt(worst) + ", min margin " + fmt(least_margin) + ", non-closing draws skipped " +
                std::to_string(rejected_open)};
}

// 8 ------------------------------------------------------------------------
Outcome angle_pathology() {
    bool pass = true;
    std::string detail;
    const double step = 1e-3;
    for (int k = 1; k <= 6; ++k) {
        double prev_a = 0.0;
        double prev_m = lr::convexity_margin(lr::single_component(k, 0.0), 4096);
        double onset = -1.0;
        for (int i = 1; i * step <= 2.0 / k; ++i) {
            const double a = i * step;
            const double m = lr::convexity_margin(lr::single_component(k, a), 4096);
            if (prev_m > 0.0 && m <= 0.0) {
                onset = 0.5 * (prev_a + a);
                break;
            }
            prev_a = a;
            prev_m = m;
        }
        const double miss = std::abs(onset * k - 1.0);
        const bool ok = onset > 0.0 && std::abs(onset - 1.0 / k) <= step;
        pass = pass && ok;
        detail += " k=" + std::to_string(k) + " |a k|-1=" + fmt(miss) + (ok ? "" : "(miss)") + ";";
    }

    const lr::AngleProfile first(2 * pi, {{2, 0.4, 0.0}});
    const lr::AngleProfile second(2 * pi, {{5, 0.4, 0.0}});
    const double sum_margin = lr::convexity_margin(lr::add_angle_profiles(first, second), 4096);
    pass = pass && sum_margin < 0.0;
    detail += " angle sum margin " + fmt(sum_margin) + ";";

    std::mt19937_64 rng(1008);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    double least_r = 1e300;
    for (int i = 0; i < 200; ++i) {
        const auto sum = lr::testing::random_profile(rng) + lr::testing::random_profile(rng);
        for (int j = 0; j < 100; ++j) least_r = std::min(least_r, lr::radius(sum, angle(rng)));
    }
    const auto mix = LogRadiusProfile::elementary(Frequency::integer(2), 0.4) +
                     LogRadiusProfile::elementary(Frequency::integer(5), 0.4);
    for (int j = 0; j <= 4096; ++j) least_r = std::min(least_r, lr::radius(mix, 2 * pi * j / 4096));
    pass = pass && least_r > 0.0;
    detail += " min r over log-radius mixes " + fmt(least_r);
    return {pass, detail};
}

// 9 ------------------------------------------------------------------------
std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome figure_regeneration() {
    const auto root = fs::temp_directory_path() / "logradius_acceptance_figures";
    fs::remove_all(root);
    for (const char* run : {"run1", "run2"}) {
        const std::string cmd = "'" LOGRADIUS_CLI "' regen-figures '" + (root / run).string() + "' >/dev/null";
        const int status = std::system(cmd.c_str());
        if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {false, "regen-figures exited abnormally"};
    }
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(root / "run1")) names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    bool identical = true;
    for (const auto& n : names) identical = identical && slurp(root / "run1" / n) == slurp(root / "run2" / n);

    const std::vector<std::string> expected{"fig1_elementary_shapes.svg", "fig2a_scalar_multiplication.svg",
                                            "fig2b_addition.svg", "figA1_angle_profile.svg"};
    const auto gallery = slurp(root / "run1" / expected[0]);
    std::size_t paths = 0;
    for (auto pos = gallery.find("<path"); pos != std::string::npos; pos = gallery.find("<path", pos + 1)) ++paths;
    fs::remove_all(root);
    return {identical && names == expected && paths == 9,
            std::to_string(names.size()) + " files, byte-identical " + (identical ? "yes" : "no") +
                ", gallery paths " + std::to_string(paths)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "vector-space axioms", 5.0, vector_space_axioms},
        {2, "closure of rational frequencies", 30.0, closure_theorem},
        {3, "rotational symmetry", 30.0, rotational_symmetry},
        {4, "spiral limit bound", 0.0, spiral_limit},
        {5, "orthogonality and Parseval", 0.0, hilbert_structure},
        {6, "spectrum round trip", 0.0, spectrum_round_trip},
        {7, "log-radius/angle duality", 0.0, duality_round_trip},
        {8, "angle profile pathology", 0.0, angle_pathology},
        {9, "figure regeneration", 60.0, figure_regeneration},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = c.check();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_seconds > 0.0 && secs >= c.budget_seconds) {
            r.pass = false;
            r.detail += "; over time budget " + fmt(c.budget_seconds) + " s";
        }
        failed += !r.pass;
        std::printf("%s [%d] %s (%.2f s): %s\n", r.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
