#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace scattex {

struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

/// Line chart with axes, ticks and a legend; one polyline per series.
void write_svg_line_chart(const std::vector<PlotSeries>& series, const std::string& x_label,
                          const std::string& y_label, const std::filesystem::path& path);

} // namespace scattex
