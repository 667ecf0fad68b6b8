#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "profile.hpp"
#include "quadrature.hpp"

namespace logradius {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double k, Point a) noexcept { return {k * a.x, k * a.y}; }
    friend Point operator*(Point a, double k) noexcept { return {k * a.x, k * a.y}; }
    Point& operator+=(Point o) noexcept {
        x += o.x;
        y += o.y;
        return *this;
    }
    friend bool operator==(const Point&, const Point&) = default;
};

inline double length(Point p) noexcept { return std::hypot(p.x, p.y); }

/// Default relative endpoint gap under which a rendered curve counts as closed.
inline constexpr double default_closure_tolerance = 1e-6;

/// Sampled plane curve. `params` holds the sampling parameter (θ for
/// log-radius renders, normalized arc length s for angle-profile renders);
/// `arc_lengths` is the cumulative length from the first sample.
class PlaneCurve {
public:
    PlaneCurve(std::vector<Point> points, std::vector<double> params, std::vector<double> arc_lengths, bool closed)
        : points_(std::move(points)), params_(std::move(params)), arc_lengths_(std::move(arc_lengths)), closed_(closed) {
        if (points_.size() < 2) throw InputError("a plane curve needs at least two samples");
        if (params_.size() != points_.size() || arc_lengths_.size() != points_.size()) {
            throw InputError("points, params and arc_lengths must have equal length");
        }
        for (std::size_t i = 1; i < points_.size(); ++i) {
            if (!(params_[i] > params_[i - 1])) throw InputError("curve params must be strictly increasing");
            if (!(arc_lengths_[i] > arc_lengths_[i - 1])) throw InputError("curve arc lengths must be strictly increasing");
        }
    }

    const std::vector<Point>& points() const noexcept { return points_; }
    const std::vector<double>& params() const noexcept { return params_; }
    const std::vector<double>& arc_lengths() const noexcept { return arc_lengths_; }
    bool closed() const noexcept { return closed_; }
    std::size_t size() const noexcept { return points_.size(); }

private:
    std::vector<Point> points_;
    std::vector<double> params_;
    std::vector<double> arc_lengths_;
    bool closed_;
};

struct BoundingBox {
    Point min;
    Point max;

    double diagonal() const noexcept { return length(max - min); }
};

inline BoundingBox bounding_box(const PlaneCurve& c) {
    BoundingBox b{c.points().front(), c.points().front()};
    for (const auto& p : c.points()) {
        b.min = {std::min(b.min.x, p.x), std::min(b.min.y, p.y)};
        b.max = {std::max(b.max.x, p.x), std::max(b.max.y, p.y)};
    }
    return b;
}

/// Curve diameter, approximated by the bounding-box diagonal.
inline double diameter(const PlaneCurve& c) { return bounding_box(c).diagonal(); }

/// ‖last − first‖ / diameter.
inline double closure_gap(const PlaneCurve& c) {
    const double d = diameter(c);
    if (!(d > 0.0)) throw DegenerateCurveError("closure_gap of a curve with zero extent");
    return length(c.points().back() - c.points().front()) / d;
}

/// Arc-length weighted centroid: segment midpoints weighted by Δs.
inline Point centroid(const PlaneCurve& c) {
    const auto& pts = c.points();
    const auto& s = c.arc_lengths();
    Point acc;
    double w = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double ds = s[i + 1] - s[i];
        acc = acc + (0.5 * ds) * (pts[i] + pts[i + 1]);
        w += ds;
    }
    return (1.0 / w) * acc;
}

// ---------------------------------------------------------------------------
// Rendering

struct RenderOptions {
    int samples_per_2pi = 4096;
    double closure_tolerance = default_closure_tolerance;
    /// θ-interval to render. Defaults to the profile domain when finite,
    /// otherwise one period for periodic profiles, otherwise [lo, lo + 2π].
    std::optional<Domain> window;
};

/// Interval `render` uses for the given profile and options.
inline Domain render_window(const LogRadiusProfile& p, const RenderOptions& opts = {}) {
    const Domain& d = p.domain();
    if (opts.window) {
        const Domain w = *opts.window;
        if (!w.is_finite() || !(w.hi > w.lo)) throw DomainError("render window must be finite and non-empty");
        if (!d.contains(w)) throw DomainError("render window lies outside the profile domain");
        return w;
    }
    if (d.is_finite()) return d;
    const double span = period(p).value_or(two_pi);
    if (std::isfinite(d.lo)) return {d.lo, d.lo + span};
    if (std::isfinite(d.hi)) return {d.hi - span, d.hi};
    return {0.0, span};
}

namespace detail {

struct PathSample {
    double x = 0.0;
    double y = 0.0;
    double s = 0.0;

    PathSample& operator+=(const PathSample& o) noexcept {
        x += o.x;
        y += o.y;
        s += o.s;
        return *this;
    }
    friend PathSample operator+(PathSample a, const PathSample& b) noexcept { return a += b; }
    friend PathSample operator*(double k, PathSample a) noexcept { return {k * a.x, k * a.y, k * a.s}; }
    friend PathSample operator*(PathSample a, double k) noexcept { return k * a; }
};

}  // namespace detail

/// Integrates Γ'(θ) = r(θ)(cos θ, sin θ) from the origin over the render
/// window with uniform θ steps, Simpson's rule on each step.
inline PlaneCurve render(const LogRadiusProfile& p, const RenderOptions& opts = {}) {
    if (opts.samples_per_2pi < 16) throw PreconditionError("samples_per_2pi must be >= 16");
    const Domain w = render_window(p, opts);
    const auto intervals = static_cast<std::size_t>(
        std::max(1.0, std::ceil(w.length() / two_pi * opts.samples_per_2pi - 1e-9)));

    bool overflow = false;
    auto velocity = [&](double theta) {
        const double r = std::exp(p.value(theta));
        if (!std::isfinite(r) || r == 0.0) overflow = true;
        return detail::PathSample{r * std::cos(theta), r * std::sin(theta), r};
    };
    const auto table = quadrature::cumulative_simpson<detail::PathSample>(velocity, w.lo, w.hi, intervals);
    if (overflow) throw NumericRangeError("radius of curvature overflows or underflows over the render window");

    std::vector<Point> pts(table.size());
    std::vector<double> params(table.size());
    std::vector<double> arcs(table.size());
    const double h = w.length() / static_cast<double>(intervals);
    for (std::size_t i = 0; i < table.size(); ++i) {
        pts[i] = {table[i].x, table[i].y};
        params[i] = i + 1 == table.size() ? w.hi : w.lo + h * static_cast<double>(i);
        arcs[i] = table[i].s;
        if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y)) throw NumericRangeError("curve position overflow");
    }
    // r > 0 makes s strictly increasing; a stall means exp underflowed.
    for (std::size_t i = 1; i < arcs.size(); ++i) {
        if (!(arcs[i] > arcs[i - 1])) throw NumericRangeError("arc length stalled; radius underflow");
    }
    PlaneCurve open(std::move(pts), std::move(params), std::move(arcs), false);
    const double d = diameter(open);
    const bool closed = d > 0.0 && closure_gap(open) <= opts.closure_tolerance;
    if (!closed) return open;
    return PlaneCurve(open.points(), open.params(), open.arc_lengths(), true);
}

inline PlaneCurve render(const LogRadiusProfile& p, int samples_per_2pi) {
    RenderOptions o;
    o.samples_per_2pi = samples_per_2pi;
    return render(p, o);
}

// ---------------------------------------------------------------------------
// Symmetry

namespace detail {

inline double point_segment_distance(Point p, Point a, Point b) noexcept {
    const Point ab = b - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    double t = len2 > 0.0 ? ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return length(p - (a + t * ab));
}

/// Uniform grid over the segments of a polyline, for nearest-segment queries.
class SegmentGrid {
public:
    explicit SegmentGrid(const std::vector<Point>& pts) : pts_(pts) {
        const std::size_t nseg = pts.size() - 1;
        box_ = {pts.front(), pts.front()};
        double total = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            box_.min = {std::min(box_.min.x, pts[i].x), std::min(box_.min.y, pts[i].y)};
            box_.max = {std::max(box_.max.x, pts[i].x), std::max(box_.max.y, pts[i].y)};
            if (i + 1 < pts.size()) total += length(pts[i + 1] - pts[i]);
        }
        const double extent = std::max(box_.max.x - box_.min.x, box_.max.y - box_.min.y);
        cell_ = std::max({4.0 * total / static_cast<double>(nseg), extent / 1024.0,
                          std::numeric_limits<double>::min()});
        nx_ = static_cast<long>((box_.max.x - box_.min.x) / cell_) + 1;
        ny_ = static_cast<long>((box_.max.y - box_.min.y) / cell_) + 1;

        // Compressed cell → segment lists.
        std::vector<std::size_t> counts(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
        auto for_cells = [&](std::size_t i, auto&& fn) {
            const Point a = pts[i];
            const Point b = pts[i + 1];
            const long x0 = cx(std::min(a.x, b.x)), x1 = cx(std::max(a.x, b.x));
            const long y0 = cy(std::min(a.y, b.y)), y1 = cy(std::max(a.y, b.y));
            for (long y = y0; y <= y1; ++y)
                for (long x = x0; x <= x1; ++x) fn(static_cast<std::size_t>(y * nx_ + x));
        };
        for (std::size_t i = 0; i < nseg; ++i) for_cells(i, [&](std::size_t c) { ++counts[c + 1]; });
        for (std::size_t c = 1; c < counts.size(); ++c) counts[c] += counts[c - 1];
        start_ = counts;
        items_.resize(counts.back());
        for (std::size_t i = 0; i < nseg; ++i) for_cells(i, [&](std::size_t c) { items_[counts[c]++] = i; });
    }

    double nearest(Point p) const {
        const long px = static_cast<long>(std::floor((p.x - box_.min.x) / cell_));
        const long py = static_cast<long>(std::floor((p.y - box_.min.y) / cell_));
        double best = std::numeric_limits<double>::infinity();
        for (long ring = 0;; ++ring) {
            // Everything in ring R+1 is at least R cells away.
            if (ring > 0 && best <= static_cast<double>(ring - 1) * cell_) break;
            bool touched = false;
            for (long y = py - ring; y <= py + ring; ++y) {
                for (long x = px - ring; x <= px + ring; ++x) {
                    if (std::max(std::abs(x - px), std::abs(y - py)) != ring) continue;
                    if (x < 0 || y < 0 || x >= nx_ || y >= ny_) continue;
                    touched = true;
                    const auto c = static_cast<std::size_t>(y * nx_ + x);
                    for (std::size_t k = start_[c]; k < start_[c + 1]; ++k) {
                        const std::size_t i = items_[k];
                        best = std::min(best, point_segment_distance(p, pts_[i], pts_[i + 1]));
                    }
                }
            }
            const bool beyond = px - ring < 0 && py - ring < 0 && px + ring >= nx_ && py + ring >= ny_;
            if (beyond && !touched && std::isfinite(best)) break;
        }
        return best;
    }

private:
    long cx(double x) const { return std::clamp(static_cast<long>((x - box_.min.x) / cell_), 0L, nx_ - 1); }
    long cy(double y) const { return std::clamp(static_cast<long>((y - box_.min.y) / cell_), 0L, ny_ - 1); }

    const std::vector<Point>& pts_;
    BoundingBox box_;
    double cell_ = 1.0;
    long nx_ = 1;
    long ny_ = 1;
    std::vector<std::size_t> start_;
    std::vector<std::size_t> items_;
};

}  // namespace detail

/// Mean distance from the curve rotated by 2π/m about its centroid to the
/// original polyline, divided by the diameter. Zero for an m-fold symmetric curve.
inline double rotational_symmetry_error(const PlaneCurve& c, int m) {
    if (m < 2) throw InputError("rotational symmetry order must be >= 2");
    if (!c.closed()) throw PreconditionError("rotational symmetry requires a closed curve");
    const double d = diameter(c);
    if (!(d > 0.0)) throw DegenerateCurveError("rotational symmetry of a curve with zero extent");

    const Point o = centroid(c);
    const double ca = std::cos(two_pi / m);
    const double sa = std::sin(two_pi / m);
    const detail::SegmentGrid grid(c.points());
    double sum = 0.0;
    for (const auto& p : c.points()) {
        const Point v = p - o;
        sum += grid.nearest(o + Point{ca * v.x - sa * v.y, sa * v.x + ca * v.y});
    }
    return sum / static_cast<double>(c.size()) / d;
}

/// Centroid moved to the origin and scaled so the farthest sample is at distance 1.
inline PlaneCurve normalize(const PlaneCurve& c) {
    const Point o = centroid(c);
    double rmax = 0.0;
    for (const auto& p : c.points()) rmax = std::max(rmax, length(p - o));
    if (!(rmax > 0.0) || !std::isfinite(rmax)) throw DegenerateCurveError("cannot normalize a curve with zero extent");
    const double k = 1.0 / rmax;
    std::vector<Point> pts;
    pts.reserve(c.size());
    for (const auto& p : c.points()) pts.push_back(k * (p - o));
    std::vector<double> arcs(c.arc_lengths());
    for (auto& s : arcs) s *= k;
    return {std::move(pts), c.params(), std::move(arcs), c.closed()};
}

}  // namespace logradius
