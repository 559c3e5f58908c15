#pragma once

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace netevo {

namespace detail {

inline std::string svg_num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// blue -> white -> red, t in [0, 1]
inline std::string heat_color(double t)
{
    t = std::clamp(t, 0.0, 1.0);
    int red, green, blue;
    if (t < 0.5) {
        const double s = t / 0.5;
        red = static_cast<int>(59 + s * (255 - 59));
        green = static_cast<int>(76 + s * (255 - 76));
        blue = static_cast<int>(192 + s * (255 - 192));
    } else {
        const double s = (t - 0.5) / 0.5;
        red = 255;
        green = static_cast<int>(255 - s * (255 - 66));
        blue = static_cast<int>(255 - s * (255 - 52));
    }
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", red, green, blue);
    return buf;
}

} // namespace detail

// Standalone SVG heat map of values[row][col]; rows are labeled with the
// y-axis values (delta), columns with the x-axis values (r). Byte output
// is deterministic for fixed input.
inline std::string render_heatmap(const std::vector<std::vector<double>>& values,
                                  const std::vector<double>& x_axis,
                                  const std::vector<double>& y_axis,
                                  const std::string& title = "")
{
    if (values.empty() || values[0].empty())
        throw std::invalid_argument("render_heatmap: empty table");
    const std::size_t n_rows = values.size();
    const std::size_t n_cols = values[0].size();
    for (const auto& row : values)
        if (row.size() != n_cols)
            throw std::invalid_argument("render_heatmap: table must be rectangular");
    if (x_axis.size() != n_cols || y_axis.size() != n_rows)
        throw std::invalid_argument("render_heatmap: axis lengths must match the table");

    double lo = values[0][0], hi = values[0][0];
    for (const auto& row : values)
        for (const double v : row) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    const double span = hi > lo ? hi - lo : 1.0;

    const int cell = 40;
    const int margin_left = 70;
    const int margin_top = 40;
    const int margin_bottom = 50;
    const int legend_w = 70;
    const int width = margin_left + static_cast<int>(n_cols) * cell + legend_w;
    const int height = margin_top + static_cast<int>(n_rows) * cell + margin_bottom;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    if (!title.empty())
        svg << "<text x=\"" << margin_left << "\" y=\"24\" font-size=\"16\">" << title
            << "</text>\n";

    // rows drawn bottom-up so larger delta sits higher
    for (std::size_t row = 0; row < n_rows; ++row) {
        const int y = margin_top + static_cast<int>(n_rows - 1 - row) * cell;
        for (std::size_t col = 0; col < n_cols; ++col) {
            const int x = margin_left + static_cast<int>(col) * cell;
            const double t = (values[row][col] - lo) / span;
            svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"" << detail::heat_color(t) << "\"/>\n";
        }
        svg << "<text x=\"" << margin_left - 8 << "\" y=\"" << y + cell / 2 + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << detail::svg_num(y_axis[row])
            << "</text>\n";
    }
    for (std::size_t col = 0; col < n_cols; ++col) {
        const int x = margin_left + static_cast<int>(col) * cell + cell / 2;
        svg << "<text x=\"" << x << "\" y=\"" << margin_top + static_cast<int>(n_rows) * cell + 16
            << "\" font-size=\"11\" text-anchor=\"middle\">" << detail::svg_num(x_axis[col])
            << "</text>\n";
    }
    svg << "<text x=\"" << margin_left + static_cast<int>(n_cols) * cell / 2 << "\" y=\""
        << height - 12 << "\" font-size=\"14\" text-anchor=\"middle\">r</text>\n";
    svg << "<text x=\"18\" y=\"" << margin_top + static_cast<int>(n_rows) * cell / 2
        << "\" font-size=\"14\">&#948;</text>\n";

    // color scale
    const int legend_x = margin_left + static_cast<int>(n_cols) * cell + 16;
    const int legend_h = static_cast<int>(n_rows) * cell;
    for (int i = 0; i < legend_h; ++i) {
        const double t = 1.0 - static_cast<double>(i) / std::max(1, legend_h - 1);
        svg << "<rect x=\"" << legend_x << "\" y=\"" << margin_top + i
            << "\" width=\"14\" height=\"1\" fill=\"" << detail::heat_color(t) << "\"/>\n";
    }
    svg << "<text x=\"" << legend_x + 18 << "\" y=\"" << margin_top + 10
        << "\" font-size=\"10\">" << detail::svg_num(hi) << "</text>\n";
    svg << "<text x=\"" << legend_x + 18 << "\" y=\"" << margin_top + legend_h
        << "\" font-size=\"10\">" << detail::svg_num(lo) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace netevo
