#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "sar/blocking.hpp"
#include "sar/geometry.hpp"

namespace sar {

struct RenderOptions {
    bool draw_moves = false;
    bool draw_translation_arrow = true;
    double scale = 24.0;  // pixels per plane unit
};

// SVG picture of an instance: start discs stroked, translated target discs
// filled at 40% opacity, optional move segments and the translation arrow.
inline std::string render_svg(const Configuration& s, const Configuration& t, const Vec2& v,
                              const Matching* m = nullptr, const Itinerary* itinerary = nullptr,
                              const RenderOptions& opt = {}) {
    std::vector<Point> all = s.points;
    for (const Point& p : t.points) all.push_back(p + v);
    all.push_back({0.0, 0.0});
    Rect box = aabr_of_discs(all);
    double pad = 2.0;
    box.xlo -= pad;
    box.xhi += pad;
    box.ylo -= pad;
    box.yhi += pad;

    double sc = opt.scale;
    auto X = [&](double x) { return (x - box.xlo) * sc; };
    auto Y = [&](double y) { return (box.yhi - y) * sc; };  // flip y for SVG

    std::ostringstream svg;
    svg << std::setprecision(10);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << box.width() * sc << "\" height=\""
        << box.height() * sc << "\" viewBox=\"0 0 " << box.width() * sc << " " << box.height() * sc
        << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const Point& p : s.points)
        svg << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"" << sc
            << "\" fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"1.5\"/>\n";
    for (const Point& p : t.points)
        svg << "<circle cx=\"" << X(p.x + v.x) << "\" cy=\"" << Y(p.y + v.y) << "\" r=\"" << sc
            << "\" fill=\"#e08020\" fill-opacity=\"0.4\" stroke=\"#b06010\" stroke-width=\"1\"/>\n";

    if (opt.draw_moves && m) {
        std::vector<std::size_t> order;
        if (itinerary) order = itinerary->order;
        else
            for (std::size_t i = 0; i < m->size(); ++i) order.push_back(i);
        for (std::size_t step = 0; step < order.size(); ++step) {
            const auto& [si, ti] = m->pairs[order[step]];
            const Point& a = s.points[si];
            Point b = t.points[ti] + v;
            svg << "<line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\""
                << Y(b.y) << "\" stroke=\"#777\" stroke-width=\"0.8\" stroke-dasharray=\"4 3\"/>\n";
            svg << "<text x=\"" << X(a.x) << "\" y=\"" << Y(a.y) << "\" font-size=\"" << 0.6 * sc
                << "\" fill=\"#333\" text-anchor=\"middle\">" << step + 1 << "</text>\n";
        }
    }

    if (opt.draw_translation_arrow && norm(v) > 1e-12) {
        Vec2 tip = v;
        Vec2 d = normalized(v);
        Vec2 w1 = tip - d * 0.8 + perp(d) * 0.4;
        Vec2 w2 = tip - d * 0.8 - perp(d) * 0.4;
        svg << "<line x1=\"" << X(0.0) << "\" y1=\"" << Y(0.0) << "\" x2=\"" << X(tip.x) << "\" y2=\""
            << Y(tip.y) << "\" stroke=\"#c02020\" stroke-width=\"2\"/>\n";
        svg << "<polygon points=\"" << X(tip.x) << "," << Y(tip.y) << " " << X(w1.x) << "," << Y(w1.y)
            << " " << X(w2.x) << "," << Y(w2.y) << "\" fill=\"#c02020\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

inline void save_svg(const std::string& path, const std::string& svg) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << svg;
}

}  // namespace sar
