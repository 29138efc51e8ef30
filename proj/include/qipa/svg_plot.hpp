#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qipa {

struct PlotSeries {
    std::string label;
    std::string color;  // empty = palette default
    std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;
    bool timestamp = true;  // creation-time comment; suppressed by --no-timestamp
};

// Minimal line plot: axes, ticks, polylines, legend. Output is deterministic
// except for the optional timestamp comment.
std::string render_line_plot(const PlotSpec& spec, const std::vector<PlotSeries>& series);

}  // namespace qipa
