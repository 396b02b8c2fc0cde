#include "scattex/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>

#include "scattex/errors.hpp"

namespace scattex {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                         "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

} // namespace

void write_svg_line_chart(const std::vector<PlotSeries>& series, const std::string& x_label,
                          const std::string& y_label, const std::filesystem::path& path) {
    if (series.empty()) throw ParameterError("plot: no series to draw");

    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size() || s.x.empty())
            throw ParameterError("plot: series '" + s.name + "' is empty or ragged");
        for (double v : s.x) {
            x_min = std::min(x_min, v);
            x_max = std::max(x_max, v);
        }
        for (double v : s.y) {
            y_min = std::min(y_min, v);
            y_max = std::max(y_max, v);
        }
    }
    if (x_max == x_min) x_max = x_min + 1;
    if (y_max == y_min) y_max = y_min + 1;
    // a little vertical headroom
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const double width = 720, height = 480;
    const double ml = 70, mr = 170, mt = 30, mb = 60;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto sx = [&](double x) { return ml + pw * (x - x_min) / (x_max - x_min); };
    auto sy = [&](double y) { return mt + ph * (1.0 - (y - y_min) / (y_max - y_min)); };

    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
        << mt + ph << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
        << "\" stroke=\"black\"/>\n";

    // ticks
    const int n_ticks = 5;
    for (int t = 0; t <= n_ticks; ++t) {
        const double fx = x_min + (x_max - x_min) * t / n_ticks;
        const double fy = y_min + (y_max - y_min) * t / n_ticks;
        out << "<line x1=\"" << sx(fx) << "\" y1=\"" << mt + ph << "\" x2=\"" << sx(fx)
            << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << sx(fx) << "\" y=\"" << mt + ph + 20
            << "\" text-anchor=\"middle\" font-size=\"12\">" << fmt(fx) << "</text>\n";
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << sy(fy) << "\" x2=\"" << ml << "\" y2=\""
            << sy(fy) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << ml - 8 << "\" y=\"" << sy(fy) + 4
            << "\" text-anchor=\"end\" font-size=\"12\">" << fmt(fy) << "</text>\n";
    }

    // axis labels
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 15
        << "\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 " << mt + ph / 2
        << ")\">" << xml_escape(y_label) << "</text>\n";

    // series + legend
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kColors[s % std::size(kColors)];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series[s].x.size(); ++i)
            out << fmt(sx(series[s].x[i])) << ',' << fmt(sy(series[s].y[i])) << ' ';
        out << "\"/>\n";
        for (std::size_t i = 0; i < series[s].x.size(); ++i)
            out << "<circle cx=\"" << fmt(sx(series[s].x[i])) << "\" cy=\""
                << fmt(sy(series[s].y[i])) << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";

        const double ly = mt + 14 + 18 * static_cast<double>(s);
        out << "<line x1=\"" << ml + pw + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << ml + pw + 36
            << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << ml + pw + 42 << "\" y=\"" << ly
            << "\" font-size=\"12\">" << xml_escape(series[s].name) << "</text>\n";
    }

    out << "</svg>\n";
    if (!out) throw IoError("write failure: " + path.string());
}

} // namespace scattex
