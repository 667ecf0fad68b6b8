#pragma once

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "angle_profile.hpp"
#include "curve.hpp"
#include "errors.hpp"
#include "profile.hpp"

// Text document format (UTF-8, '\n' line ends):
//
//   format_version = 1
//   kind = log_radius_profile
//   constant = 0
//   slope = 0
//   theta_min = -inf
//   theta_max = inf
//
//   [component]
//   nu_num = 2          (or: nu_real = 1.4142135623730951)
//   nu_den = 1
//   epsilon = 0.40000000000000002
//   theta0 = 0
//
// Angle profiles use kind = angle_profile, a total_turn field and
// [descriptor] sections with k, a, b. Blank lines and '#' comments are
// ignored. format_version must be the first entry; unknown or repeated
// fields are errors.

namespace logradius::io {

inline constexpr int format_version = 1;

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

struct Entry {
    std::string key;
    std::string value;
    std::size_t line = 0;
};

struct Section {
    std::string name;  // empty for the header block
    std::size_t line = 0;
    std::vector<Entry> entries;
};

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<Section> split_sections(std::string_view text) {
    std::vector<Section> out(1);
    std::size_t line_no = 0;
    bool version_seen = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
            out.push_back({trim(std::string_view(line).substr(1, line.size() - 2)), line_no, {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
        Entry e{trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1)), line_no};
        if (e.key.empty()) throw ParseError(line_no, "empty key");

        if (!version_seen) {
            if (e.key != "format_version") throw ParseError(line_no, "document must start with format_version");
            version_seen = true;
        }
        for (const auto& prev : out.back().entries) {
            if (prev.key == e.key) throw ParseError(line_no, "duplicate field '" + e.key + "'");
        }
        out.back().entries.push_back(std::move(e));
    }
    if (!version_seen) throw ParseError(0, "missing format_version");
    return out;
}

inline double parse_double(const Entry& e) {
    const char* begin = e.value.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || errno == ERANGE) {
        throw ParseError(e.line, "field '" + e.key + "': bad number '" + e.value + "'");
    }
    return v;
}

inline long long parse_int(const Entry& e) {
    const char* begin = e.value.c_str();
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(begin, &end, 10);
    if (end == begin || *end != '\0' || errno == ERANGE) {
        throw ParseError(e.line, "field '" + e.key + "': bad integer '" + e.value + "'");
    }
    return v;
}

/// Validates the header's format_version and kind; returns the header section.
inline const Section& check_header(const std::vector<Section>& doc, std::string_view kind) {
    const Section& head = doc.front();
    const Entry& ver = head.entries.front();
    const long long v = parse_int(ver);
    if (v > format_version) {
        throw VersionError(ver.line, "format_version " + ver.value + " is newer than supported version " +
                                         std::to_string(format_version));
    }
    if (v < 1) throw ParseError(ver.line, "format_version must be >= 1");
    const Entry* k = nullptr;
    for (const auto& e : head.entries) {
        if (e.key == "kind") k = &e;
    }
    if (!k) throw ParseError(ver.line, "missing field 'kind'");
    if (k->value != kind) throw ParseError(k->line, "expected kind '" + std::string(kind) + "', got '" + k->value + "'");
    return head;
}

[[noreturn]] inline void unknown_field(const Entry& e) {
    throw ParseError(e.line, "unknown field '" + e.key + "'");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Log-radius profiles

inline std::string write_profile(const LogRadiusProfile& p) {
    std::ostringstream os;
    os << "format_version = " << format_version << '\n'
       << "kind = log_radius_profile\n"
       << "constant = " << format_number(p.constant()) << '\n'
       << "slope = " << format_number(p.slope()) << '\n'
       << "theta_min = " << format_number(p.domain().lo) << '\n'
       << "theta_max = " << format_number(p.domain().hi) << '\n';
    for (const auto& c : p.components()) {
        os << "\n[component]\n";
        if (c.frequency().is_rational()) {
            os << "nu_num = " << c.frequency().num() << '\n' << "nu_den = " << c.frequency().den() << '\n';
        } else {
            os << "nu_real = " << format_number(c.frequency().value()) << '\n';
        }
        os << "epsilon = " << format_number(c.epsilon()) << '\n'
           << "theta0 = " << format_number(c.theta0()) << '\n';
    }
    return os.str();
}

inline LogRadiusProfile read_profile(std::string_view text) {
    const auto doc = detail::split_sections(text);
    const auto& head = detail::check_header(doc, "log_radius_profile");

    double constant = 0.0;
    double slope = 0.0;
    Domain domain = Domain::all();
    for (const auto& e : head.entries) {
        if (e.key == "format_version" || e.key == "kind") continue;
        if (e.key == "constant") constant = detail::parse_double(e);
        else if (e.key == "slope") slope = detail::parse_double(e);
        else if (e.key == "theta_min") domain.lo = detail::parse_double(e);
        else if (e.key == "theta_max") domain.hi = detail::parse_double(e);
        else detail::unknown_field(e);
    }

    std::vector<ElementaryComponent> comps;
    for (std::size_t i = 1; i < doc.size(); ++i) {
        const auto& sec = doc[i];
        if (sec.name != "component") throw ParseError(sec.line, "unknown section '" + sec.name + "'");
        std::optional<long long> num, den;
        std::optional<double> real, eps;
        double theta0 = 0.0;
        for (const auto& e : sec.entries) {
            if (e.key == "nu_num") num = detail::parse_int(e);
            else if (e.key == "nu_den") den = detail::parse_int(e);
            else if (e.key == "nu_real") real = detail::parse_double(e);
            else if (e.key == "epsilon") eps = detail::parse_double(e);
            else if (e.key == "theta0") theta0 = detail::parse_double(e);
            else detail::unknown_field(e);
        }
        if (!eps) throw ParseError(sec.line, "component is missing 'epsilon'");
        if (real && (num || den)) throw ParseError(sec.line, "component gives both nu_real and nu_num/nu_den");
        if (!real && !(num && den)) throw ParseError(sec.line, "component needs nu_num and nu_den, or nu_real");
        try {
            const Frequency nu = real ? Frequency::real(*real) : Frequency::rational(*num, *den);
            if (nu.is_rational() && (nu.num() != *num || nu.den() != *den)) {
                throw InputError("frequency " + std::to_string(*num) + "/" + std::to_string(*den) +
                                 " is not in lowest terms");
            }
            comps.emplace_back(nu, *eps, theta0);
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& err) {
            throw ParseError(sec.line, std::string("component: ") + err.what());
        }
    }
    try {
        return {constant, slope, std::move(comps), domain};
    } catch (const Error& err) {
        throw ParseError(0, err.what());
    }
}

// ---------------------------------------------------------------------------
// Angle profiles

inline std::string write_angle_profile(const AngleProfile& p) {
    std::ostringstream os;
    os << "format_version = " << format_version << '\n'
       << "kind = angle_profile\n"
       << "total_turn = " << format_number(p.total_turn()) << '\n';
    for (const auto& d : p.descriptors()) {
        os << "\n[descriptor]\n"
           << "k = " << d.k << '\n'
           << "a = " << format_number(d.a) << '\n'
           << "b = " << format_number(d.b) << '\n';
    }
    return os.str();
}

inline AngleProfile read_angle_profile(std::string_view text) {
    const auto doc = detail::split_sections(text);
    const auto& head = detail::check_header(doc, "angle_profile");
    double total_turn = two_pi;
    for (const auto& e : head.entries) {
        if (e.key == "format_version" || e.key == "kind") continue;
        if (e.key == "total_turn") total_turn = detail::parse_double(e);
        else detail::unknown_field(e);
    }
    std::vector<Descriptor> descs;
    for (std::size_t i = 1; i < doc.size(); ++i) {
        const auto& sec = doc[i];
        if (sec.name != "descriptor") throw ParseError(sec.line, "unknown section '" + sec.name + "'");
        std::optional<long long> k;
        double a = 0.0;
        double b = 0.0;
        for (const auto& e : sec.entries) {
            if (e.key == "k") k = detail::parse_int(e);
            else if (e.key == "a") a = detail::parse_double(e);
            else if (e.key == "b") b = detail::parse_double(e);
            else detail::unknown_field(e);
        }
        if (!k || *k < 1 || *k > 1'000'000) throw ParseError(sec.line, "descriptor needs a positive 'k'");
        descs.push_back({static_cast<int>(*k), a, b});
    }
    try {
        return AngleProfile(total_turn, std::move(descs));
    } catch (const InputError& err) {
        throw ParseError(0, err.what());
    }
}

/// Which representation a document holds, judged from its kind line.
enum class DocumentKind { log_radius_profile, angle_profile };

inline DocumentKind document_kind(std::string_view text) {
    const auto doc = detail::split_sections(text);
    for (const auto& e : doc.front().entries) {
        if (e.key != "kind") continue;
        if (e.value == "log_radius_profile") return DocumentKind::log_radius_profile;
        if (e.value == "angle_profile") return DocumentKind::angle_profile;
        throw ParseError(e.line, "unknown kind '" + e.value + "'");
    }
    throw ParseError(0, "missing field 'kind'");
}

// ---------------------------------------------------------------------------
// CSV

inline std::string write_curve_csv(const PlaneCurve& c) {
    std::string out = "theta,s,x,y\n";
    char buf[128];
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", c.params()[i], c.arc_lengths()[i],
                      c.points()[i].x, c.points()[i].y);
        out += buf;
    }
    return out;
}

namespace detail {

inline std::vector<std::vector<double>> read_csv_columns(std::string_view text, std::string_view header,
                                                         std::size_t ncols) {
    std::vector<std::vector<double>> cols(ncols);
    std::size_t pos = 0;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const std::string line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != header) throw ParseError(line_no, "expected CSV header '" + std::string(header) + "'");
            header_seen = true;
            continue;
        }
        std::size_t field_start = 0;
        for (std::size_t c = 0; c < ncols; ++c) {
            const auto comma = line.find(',', field_start);
            const bool last = c + 1 == ncols;
            if (last != (comma == std::string::npos)) throw ParseError(line_no, "wrong number of CSV fields");
            const std::string field = line.substr(field_start, last ? std::string::npos : comma - field_start);
            cols[c].push_back(parse_double({std::string(header), field, line_no}));
            field_start = comma + 1;
        }
    }
    if (!header_seen) throw ParseError(0, "empty CSV document");
    return cols;
}

}  // namespace detail

/// Parses write_curve_csv output. `closed` is recomputed from the endpoint gap.
inline PlaneCurve read_curve_csv(std::string_view text, double closure_tolerance = default_closure_tolerance) {
    auto cols = detail::read_csv_columns(text, "theta,s,x,y", 4);
    std::vector<Point> pts(cols[0].size());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = {cols[2][i], cols[3][i]};
    PlaneCurve open(std::move(pts), std::move(cols[0]), std::move(cols[1]), false);
    if (diameter(open) > 0.0 && closure_gap(open) <= closure_tolerance) {
        return PlaneCurve(open.points(), open.params(), open.arc_lengths(), true);
    }
    return open;
}

/// Log-radius samples as CSV with header `theta,l`.
inline std::string write_samples_csv(const SampledLogRadius& s) {
    std::string out = "theta,l\n";
    char buf[80];
    const auto n = s.samples.size();
    for (std::size_t j = 0; j < n; ++j) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.base_period * static_cast<double>(j) / static_cast<double>(n),
                      s.samples[j]);
        out += buf;
    }
    return out;
}

struct SampleColumns {
    std::vector<double> thetas;
    std::vector<double> values;
};

inline SampleColumns read_samples_csv(std::string_view text) {
    auto cols = detail::read_csv_columns(text, "theta,l", 2);
    return {std::move(cols[0]), std::move(cols[1])};
}

}  // namespace logradius::io
