#pragma once
#include <string>
#include <vector>

namespace vflock {

// One heatmap panel: rows = alpha0 values (top = largest), columns = beta0.
// NaN cells render hatched. fixed_scale pins the color range (e.g. [0,1] for
// P and RCA); otherwise the range adapts to the finite data.
struct HeatmapGrid {
    std::vector<double> row_values;      // alpha0 axis
    std::vector<double> col_values;      // beta0 axis
    std::vector<double> cells;           // row-major, rows x cols, NaN = failed
    std::string metric;
    std::string title;
};

std::string emit_heatmap(const HeatmapGrid& grid, bool fixed_unit_scale);

// simple line plot (one polyline per series) for aggregate-vs-parameter views
struct PlotSeries {
    std::string label;
    std::vector<double> x, y;
};

std::string emit_plot(const std::vector<PlotSeries>& series, const std::string& x_label,
                      const std::string& y_label, const std::string& title);

} // namespace vflock
