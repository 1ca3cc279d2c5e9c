#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fhjam/report.hpp"

namespace fhjam {

struct SvgSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;  // NaN lifts the pen
};

struct SvgChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<SvgSeries> series;
    int width_px = 880;
    int height_px = 540;
};

/// Renders a plain polyline chart with axes, ticks and a legend. Output is
/// deterministic for identical inputs.
std::string render_line_chart(const SvgChartSpec& spec);

/// Chart for a figure series: column 0 is x, the rest are one line each.
/// Long series are decimated to keep the file small; CSVs keep full
/// resolution.
void write_figure_svg(const FigureSeries& fs, const std::filesystem::path& path);

}  // namespace fhjam
