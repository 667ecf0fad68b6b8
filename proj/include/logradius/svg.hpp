#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curve.hpp"

namespace logradius::svg {

struct StyledCurve {
    PlaneCurve curve;
    std::string label;
    std::string stroke = "#1b3a6b";
    double stroke_width = 1.5;
};

/// Cells are laid out row-major, `columns` per row, unless `row_lengths`
/// gives an explicit number of cells for each row. Each curve is expected
/// to be normalized (centroid at the origin, max radius 1).
struct GridLayout {
    int columns = 3;
    std::vector<int> row_lengths;
    double cell = 160.0;
    double margin = 12.0;
    std::string title;
};

namespace detail {

inline std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    // Avoid "-0.000" so output is stable across sign-of-zero noise.
    if (std::string_view(buf) == "-0.000") return "0.000";
    return buf;
}

}  // namespace detail

/// SVG 1.1 document with one path per curve arranged on a grid.
inline std::string write_svg(std::span<const StyledCurve> curves, const GridLayout& layout = {}) {
    constexpr double label_height = 18.0;
    constexpr double title_height = 26.0;
    const auto n = static_cast<int>(curves.size());
    // Cell (row, column) of every curve.
    std::vector<std::pair<int, int>> cells;
    int cols = std::max(1, layout.columns);
    if (layout.row_lengths.empty()) {
        for (int i = 0; i < n; ++i) cells.emplace_back(i / cols, i % cols);
    } else {
        for (int r = 0; r < static_cast<int>(layout.row_lengths.size()); ++r) {
            cols = std::max(cols, layout.row_lengths[static_cast<std::size_t>(r)]);
            for (int c = 0; c < layout.row_lengths[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
        }
        while (static_cast<int>(cells.size()) < n) {
            const int r = cells.empty() ? 0 : cells.back().first + 1;
            for (int c = 0; c < cols && static_cast<int>(cells.size()) < n; ++c) cells.emplace_back(r, c);
        }
    }
    const int rows = n == 0 ? 0 : cells[static_cast<std::size_t>(n - 1)].first + 1;
    const double top = layout.margin + (layout.title.empty() ? 0.0 : title_height);
    const double width = 2.0 * layout.margin + cols * layout.cell;
    const double height = top + layout.margin + rows * layout.cell;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::num(width) +
           "\" height=\"" + detail::num(height) + "\" viewBox=\"0 0 " + detail::num(width) + " " +
           detail::num(height) + "\">\n";
    if (!layout.title.empty()) {
        out += "  <text x=\"" + detail::num(width / 2) + "\" y=\"" + detail::num(layout.margin + 16.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
               detail::escape(layout.title) + "</text>\n";
    }

    const double radius = 0.5 * (layout.cell - label_height) - 6.0;
    for (int i = 0; i < n; ++i) {
        const auto& item = curves[static_cast<std::size_t>(i)];
        const auto [row, col] = cells[static_cast<std::size_t>(i)];
        const double x0 = layout.margin + col * layout.cell;
        const double y0 = top + row * layout.cell;
        const double cx = x0 + 0.5 * layout.cell;
        const double cy = y0 + 0.5 * (layout.cell - label_height);

        out += "  <g>\n    <path fill=\"none\" stroke=\"" + detail::escape(item.stroke) + "\" stroke-width=\"" +
               detail::num(item.stroke_width) + "\" stroke-linejoin=\"round\" d=\"";
        const auto& pts = item.curve.points();
        for (std::size_t j = 0; j < pts.size(); ++j) {
            out += j == 0 ? "M" : " L";
            out += detail::num(cx + radius * pts[j].x) + " " + detail::num(cy - radius * pts[j].y);
        }
        if (item.curve.closed()) out += " Z";
        out += "\"/>\n";
        if (!item.label.empty()) {
            out += "    <text x=\"" + detail::num(cx) + "\" y=\"" + detail::num(y0 + layout.cell - 5.0) +
                   "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
                   detail::escape(item.label) + "</text>\n";
        }
        out += "  </g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace logradius::svg
