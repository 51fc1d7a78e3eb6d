#include "vflock/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <limits>

#include "vflock/csvfmt.hpp"
#include "vflock/errors.hpp"

namespace vflock {

namespace {

// compact viridis approximation, good enough for phase-diagram panels
struct Rgb {
    double r, g, b;
};
const Rgb kViridis[] = {
    {0.267, 0.005, 0.329}, {0.283, 0.141, 0.458}, {0.254, 0.265, 0.530},
    {0.207, 0.372, 0.553}, {0.164, 0.471, 0.558}, {0.128, 0.567, 0.551},
    {0.135, 0.659, 0.518}, {0.267, 0.749, 0.441}, {0.478, 0.821, 0.318},
    {0.741, 0.873, 0.150}, {0.993, 0.906, 0.144},
};

std::string color_at(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const int n = static_cast<int>(std::size(kViridis)) - 1;
    const double pos = t * n;
    const int i = std::min(static_cast<int>(pos), n - 1);
    const double f = pos - i;
    auto channel = [&](double a, double b) {
        return static_cast<int>(std::lround(255.0 * (a + (b - a) * f)));
    };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", channel(kViridis[i].r, kViridis[i + 1].r),
                  channel(kViridis[i].g, kViridis[i + 1].g),
                  channel(kViridis[i].b, kViridis[i + 1].b));
    return buf;
}

std::string fmt(double v, int decimals = 3) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", decimals, v);
    return buf;
}

} // namespace

std::string emit_heatmap(const HeatmapGrid& grid, bool fixed_unit_scale) {
    const std::size_t rows = grid.row_values.size();
    const std::size_t cols = grid.col_values.size();
    if (rows == 0 || cols == 0 || grid.cells.size() != rows * cols)
        throw EmptyGrid("emit_heatmap: empty or ragged grid");

    double lo = 0.0, hi = 1.0;
    if (!fixed_unit_scale) {
        lo = std::numeric_limits<double>::infinity();
        hi = -lo;
        for (double v : grid.cells) {
            if (!std::isfinite(v)) continue;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (!(hi > lo)) { // constant or all-NaN grid
            lo = std::isfinite(lo) ? lo - 0.5 : 0.0;
            hi = lo + 1.0;
        }
    }

    const double cell = 64.0, mleft = 86.0, mtop = 46.0, mbottom = 56.0, mright = 20.0;
    const double width = mleft + cols * cell + mright;
    const double height = mtop + rows * cell + mbottom;

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<defs><pattern id=\"hatch\" width=\"8\" height=\"8\" patternTransform=\"rotate(45)\" "
         "patternUnits=\"userSpaceOnUse\"><rect width=\"8\" height=\"8\" fill=\"#dddddd\"/>"
         "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"#888888\" stroke-width=\"2\"/>"
         "</pattern></defs>\n";
    s += "<text x=\"" + fmt(width / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         grid.title + "</text>\n";

    for (std::size_t r = 0; r < rows; ++r) {
        // row 0 drawn at the bottom so the vertical axis increases upward
        const double y = mtop + (rows - 1 - r) * cell;
        for (std::size_t cidx = 0; cidx < cols; ++cidx) {
            const double x = mleft + cidx * cell;
            const double v = grid.cells[r * cols + cidx];
            if (std::isfinite(v)) {
                const double t = (v - lo) / (hi - lo);
                s += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(cell) +
                     "\" height=\"" + fmt(cell) + "\" fill=\"" + color_at(t) +
                     "\" stroke=\"white\"/>\n";
                const bool dark = t < 0.5;
                s += "<text x=\"" + fmt(x + cell / 2) + "\" y=\"" + fmt(y + cell / 2 + 4) +
                     "\" text-anchor=\"middle\" fill=\"" + (dark ? "white" : "black") + "\">" +
                     fmt(v) + "</text>\n";
            } else {
                s += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(cell) +
                     "\" height=\"" + fmt(cell) + "\" fill=\"url(#hatch)\" stroke=\"white\"/>\n";
            }
        }
        s += "<text x=\"" + fmt(mleft - 8) + "\" y=\"" + fmt(y + cell / 2 + 4) +
             "\" text-anchor=\"end\">" + fmt(grid.row_values[r]) + "</text>\n";
    }
    for (std::size_t cidx = 0; cidx < cols; ++cidx) {
        const double x = mleft + cidx * cell + cell / 2;
        s += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(mtop + rows * cell + 18) +
             "\" text-anchor=\"middle\">" + fmt(grid.col_values[cidx]) + "</text>\n";
    }
    s += "<text x=\"" + fmt(mleft + cols * cell / 2) + "\" y=\"" + fmt(height - 12) +
         "\" text-anchor=\"middle\">beta0</text>\n";
    s += "<text x=\"20\" y=\"" + fmt(mtop + rows * cell / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " + fmt(mtop + rows * cell / 2) +
         ")\">alpha0</text>\n";
    s += "</svg>\n";
    return s;
}

std::string emit_plot(const std::vector<PlotSeries>& series, const std::string& x_label,
                      const std::string& y_label, const std::string& title) {
    if (series.empty()) throw EmptyGrid("emit_plot: no series");
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    for (const auto& sr : series) {
        for (std::size_t i = 0; i < sr.x.size(); ++i) {
            if (!std::isfinite(sr.x[i]) || !std::isfinite(sr.y[i])) continue;
            xlo = std::min(xlo, sr.x[i]);
            xhi = std::max(xhi, sr.x[i]);
            ylo = std::min(ylo, sr.y[i]);
            yhi = std::max(yhi, sr.y[i]);
        }
    }
    if (!(xhi >= xlo)) throw EmptyGrid("emit_plot: no finite data");
    if (xhi == xlo) xhi = xlo + 1.0;
    if (yhi == ylo) yhi = ylo + 1.0;

    const double W = 560.0, H = 400.0, ml = 70.0, mr = 130.0, mt = 44.0, mb = 54.0;
    auto px = [&](double x) { return ml + (x - xlo) / (xhi - xlo) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (y - ylo) / (yhi - ylo) * (H - mt - mb); };
    const char* palette[] = {"#4467c4", "#d1502f", "#3d9e4e", "#8a54a2", "#c8a227", "#4aa6b5"};

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W) + "\" height=\"" + fmt(H) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<text x=\"" + fmt(W / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         title + "</text>\n";
    // axes
    s += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(H - mb) + "\" x2=\"" + fmt(W - mr) +
         "\" y2=\"" + fmt(H - mb) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt) + "\" x2=\"" + fmt(ml) + "\" y2=\"" +
         fmt(H - mb) + "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = xlo + (xhi - xlo) * i / 4;
        const double fy = ylo + (yhi - ylo) * i / 4;
        s += "<text x=\"" + fmt(px(fx)) + "\" y=\"" + fmt(H - mb + 16) +
             "\" text-anchor=\"middle\">" + fmt(fx) + "</text>\n";
        s += "<text x=\"" + fmt(ml - 6) + "\" y=\"" + fmt(py(fy) + 4) +
             "\" text-anchor=\"end\">" + fmt(fy) + "</text>\n";
    }
    s += "<text x=\"" + fmt((ml + W - mr) / 2) + "\" y=\"" + fmt(H - 14) +
         "\" text-anchor=\"middle\">" + x_label + "</text>\n";
    s += "<text x=\"18\" y=\"" + fmt((mt + H - mb) / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " + fmt((mt + H - mb) / 2) +
         ")\">" + y_label + "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const char* col = palette[k % std::size(palette)];
        std::string pts;
        for (std::size_t i = 0; i < series[k].x.size(); ++i) {
            if (!std::isfinite(series[k].x[i]) || !std::isfinite(series[k].y[i])) continue;
            pts += fmt(px(series[k].x[i]), 6) + "," + fmt(py(series[k].y[i]), 6) + " ";
        }
        s += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + col +
             "\" stroke-width=\"2\"/>\n";
        const double ly = mt + 18.0 * k;
        s += "<line x1=\"" + fmt(W - mr + 8) + "\" y1=\"" + fmt(ly) + "\" x2=\"" +
             fmt(W - mr + 30) + "\" y2=\"" + fmt(ly) + "\" stroke=\"" + col +
             "\" stroke-width=\"2\"/>\n";
        s += "<text x=\"" + fmt(W - mr + 36) + "\" y=\"" + fmt(ly + 4) + "\">" + series[k].label +
             "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

} // namespace vflock
