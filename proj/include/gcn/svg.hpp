#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include <gcn/gc.hpp>
#include <gcn/geometry.hpp>
#include <gcn/poly.hpp>

namespace gcn {

/// Renders the node set and its line structure: nodes as circles, census
/// lines with >= 3 nodes as segments clipped to the padded bounding box,
/// maximal lines highlighted (and always drawn, also in low degrees where
/// they carry only two nodes). All geometry is clipped exactly; doubles
/// appear only when coordinates are printed.
inline std::string render_svg(const NodeSet& nodes, const LineCensus& census,
                              const std::vector<Line>& maximal) {
    // padded bounding box (10% of the span on each side)
    Rat xmin = nodes[0].x, xmax = nodes[0].x, ymin = nodes[0].y, ymax = nodes[0].y;
    for (const Point& p : nodes.nodes()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    Rat spanx = xmax - xmin, spany = ymax - ymin;
    const Rat pad_x = spanx == 0 ? Rat(1) : spanx / 10;
    const Rat pad_y = spany == 0 ? Rat(1) : spany / 10;
    xmin -= pad_x;
    xmax += pad_x;
    ymin -= pad_y;
    ymax += pad_y;
    spanx = xmax - xmin;
    spany = ymax - ymin;

    const double canvas = 800.0;
    const double scale =
        (canvas - 0.0) / std::max(spanx.convert_to<double>(), spany.convert_to<double>());
    const auto sx = [&](const Rat& x) { return (x - xmin).convert_to<double>() * scale; };
    const auto sy = [&](const Rat& y) { return canvas - (y - ymin).convert_to<double>() * scale; };
    const auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    svg += "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

    for (const CensusEntry& e : census.entries) {
        const bool is_maximal =
            std::find(maximal.begin(), maximal.end(), e.line) != maximal.end();
        if (e.nodes.size() < 3 && !is_maximal) continue;

        const LineParam par = parametrize(e.line);
        bool have = false, feasible = true;
        Rat tlo, thi;
        const auto clip_axis = [&](const Rat& v0, const Rat& d, const Rat& lo, const Rat& hi) {
            if (d == 0) {
                feasible = feasible && v0 >= lo && v0 <= hi;
                return;
            }
            Rat t1 = (lo - v0) / d, t2 = (hi - v0) / d;
            if (t2 < t1) std::swap(t1, t2);
            if (!have) {
                tlo = t1;
                thi = t2;
                have = true;
            } else {
                tlo = std::max(tlo, t1);
                thi = std::min(thi, t2);
            }
        };
        clip_axis(par.p0.x, par.dx, xmin, xmax);
        clip_axis(par.p0.y, par.dy, ymin, ymax);
        if (!feasible || !have || thi < tlo) continue;

        const Point a = par.at(tlo), b = par.at(thi);
        svg += "<line x1=\"" + fmt(sx(a.x)) + "\" y1=\"" + fmt(sy(a.y)) + "\" x2=\"" +
               fmt(sx(b.x)) + "\" y2=\"" + fmt(sy(b.y)) + "\"";
        if (is_maximal)
            svg += " stroke=\"#d62728\" stroke-width=\"2.5\"";
        else
            svg += " stroke=\"#999999\" stroke-width=\"1\"";
        svg += "/>\n";
    }

    for (const Point& p : nodes.nodes())
        svg += "<circle cx=\"" + fmt(sx(p.x)) + "\" cy=\"" + fmt(sy(p.y)) +
               "\" r=\"4\" fill=\"#1f77b4\"/>\n";

    svg += "</svg>\n";
    return svg;
}

} // namespace gcn
