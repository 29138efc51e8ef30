#include "qipa/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <limits>
#include <sstream>

#include "qipa/format.hpp"

namespace qipa {

namespace {

constexpr double kWidth = 640.0, kHeight = 420.0;
constexpr double kLeft = 72.0, kRight = 24.0, kTop = 44.0, kBottom = 52.0;
constexpr int kTicks = 5;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

// Two decimals are plenty for pixel coordinates and keep files small; the
// rounding is deterministic.
std::string coord(double v) {
    return format_double(std::round(v * 100.0) / 100.0);
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string render_line_plot(const PlotSpec& spec, const std::vector<PlotSeries>& series) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    double ypos_min = xmin;  // smallest positive y, for the log floor
    for (const PlotSeries& s : series) {
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
            if (y > 0.0) ypos_min = std::min(ypos_min, y);
        }
    }
    if (!std::isfinite(xmin)) {  // no points: default axes
        xmin = 0.0; xmax = 1.0; ymin = 0.0; ymax = 1.0; ypos_min = 0.1;
    }

    const auto ty = [&](double y) { return spec.log_y ? std::log10(std::max(y, ypos_min)) : y; };
    double tymin = ty(spec.log_y ? std::max(ymin, ypos_min) : ymin);
    double tymax = ty(std::max(ymax, spec.log_y ? ypos_min : ymax));
    if (xmax == xmin) { xmin -= 0.5; xmax += 0.5; }
    if (tymax == tymin) { tymin -= 0.5; tymax += 0.5; }

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    const auto py = [&](double y) { return kTop + plot_h - (ty(y) - tymin) / (tymax - tymin) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    if (spec.timestamp) {
        const std::time_t now = std::time(nullptr);
        char stamp[32];
        std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        svg << "<!-- generated " << stamp << " -->\n";
    }
    svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\" "
           "font-family=\"sans-serif\">" << escape(spec.title) << "</text>\n";

    // axes
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
        << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
        << kTop + plot_h << "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= kTicks; ++i) {
        const double fx = xmin + (xmax - xmin) * i / kTicks;
        const double gx = px(fx);
        svg << "<line x1=\"" << coord(gx) << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << coord(gx)
            << "\" y2=\"" << kTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << coord(gx) << "\" y=\"" << kTop + plot_h + 20
            << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
            << format_double(std::round(fx * 1e6) / 1e6) << "</text>\n";

        const double tv = tymin + (tymax - tymin) * i / kTicks;
        const double fy = spec.log_y ? std::pow(10.0, tv) : tv;
        const double gy = kTop + plot_h - (tv - tymin) / (tymax - tymin) * plot_h;
        svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << coord(gy) << "\" x2=\"" << kLeft
            << "\" y2=\"" << coord(gy) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << coord(gy + 4)
            << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
            << format_double(std::round(fy * 1e6) / 1e6) << "</text>\n";
    }

    svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">"
        << escape(spec.x_label) << "</text>\n";
    svg << "<text x=\"18\" y=\"" << kTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\" transform=\"rotate(-90 18 "
        << kTop + plot_h / 2 << ")\">" << escape(spec.y_label) << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        if (series[s].points.empty()) continue;
        const std::string color =
            series[s].color.empty() ? kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))]
                                    : series[s].color;
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : series[s].points)
            svg << coord(px(x)) << ',' << coord(py(y)) << ' ';
        svg << "\"/>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        const std::string color =
            series[s].color.empty() ? kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))]
                                    : series[s].color;
        const double ly = kTop + 10 + 16 * static_cast<double>(s);
        svg << "<line x1=\"" << kLeft + plot_w - 130 << "\" y1=\"" << ly << "\" x2=\""
            << kLeft + plot_w - 110 << "\" y2=\"" << ly << "\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << kLeft + plot_w - 104 << "\" y=\"" << ly + 4
            << "\" font-size=\"11\" font-family=\"sans-serif\">" << escape(series[s].label)
            << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace qipa
