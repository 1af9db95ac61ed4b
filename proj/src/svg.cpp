#include <algorithm>
#include <cstdio>
#include <set>
#include <string>

#include "elr/io.hpp"

namespace elr {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_svg(const straight_line_drawing& d, double scale) {
    if (d.coords.empty())
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"10\" height=\"10\"/>\n";

    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    std::set<double> levels_y;
    for (const auto& [v, p] : d.coords) {
        double x = rat_to_double(p.x), y = rat_to_double(p.y);
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        }
        xmin = std::min(xmin, x), xmax = std::max(xmax, x);
        ymin = std::min(ymin, y), ymax = std::max(ymax, y);
        levels_y.insert(y);
    }

    // drawings of record can be nearly one-dimensional; stretch the axes
    // independently so the picture stays readable (presentation only)
    double margin = 30.0;
    double wpx = std::max(240.0, 28.0 * static_cast<double>(d.coords.size()));
    double xspan = xmax - xmin, yspan = ymax - ymin;
    auto sx = [&](double x) {
        return margin + (xspan == 0 ? wpx / 2 : (x - xmin) / xspan * wpx);
    };
    auto sy = [&](double y) {
        return margin + (yspan == 0 ? 0.0 : (ymax - y) * scale);
    };
    double width = wpx + 2 * margin;
    double height = (yspan == 0 ? 0.0 : yspan * scale) + 2 * margin;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
           "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
           fmt(height) + "\">\n";

    if (levels_y.size() * 2 <= d.coords.size() + 2)
        for (double y : levels_y)
            out += "  <line x1=\"" + fmt(margin / 2) + "\" y1=\"" + fmt(sy(y)) +
                   "\" x2=\"" + fmt(width - margin / 2) + "\" y2=\"" + fmt(sy(y)) +
                   "\" stroke=\"#dddddd\" stroke-dasharray=\"4 4\"/>\n";

    for (const edge& e : d.graph.edges) {
        const point& a = d.coords.at(e.first);
        const point& b = d.coords.at(e.second);
        out += "  <line x1=\"" + fmt(sx(rat_to_double(a.x))) + "\" y1=\"" +
               fmt(sy(rat_to_double(a.y))) + "\" x2=\"" + fmt(sx(rat_to_double(b.x))) +
               "\" y2=\"" + fmt(sy(rat_to_double(b.y))) +
               "\" stroke=\"#334455\" stroke-width=\"1.4\"/>\n";
    }

    for (const auto& [v, p] : d.coords) {
        double x = sx(rat_to_double(p.x)), y = sy(rat_to_double(p.y));
        out += "  <circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) +
               "\" r=\"9\" fill=\"#ffffff\" stroke=\"#334455\"/>\n";
        out += "  <text x=\"" + fmt(x) + "\" y=\"" + fmt(y + 3.2) +
               "\" font-size=\"9\" font-family=\"sans-serif\" text-anchor=\"middle\">" +
               std::to_string(v) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace elr
