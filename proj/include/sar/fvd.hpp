#pragma once

#include <map>
#include <vector>

#include "sar/enclosing.hpp"
#include "sar/geometry.hpp"

namespace sar {

// Closed halfplane {x : dot(x, normal) >= offset}.
struct Halfplane {
    Vec2 normal;
    double offset = 0.0;

    double signed_value(const Point& p) const { return dot(p, normal) - offset; }
    bool contains(const Point& p, double slack = 0.0) const { return signed_value(p) >= -slack; }
};

// Halfplane of points x with dist(x, p) >= dist(x, q), i.e. the
// farthest-dominance of site p over site q.
inline Halfplane farther_from(const Point& p, const Point& q) {
    return Halfplane{q - p, 0.5 * (norm2(q) - norm2(p))};
}

// Convex polygon, CCW vertex order. Unbounded regions are represented
// clipped to a large box; `on_box[i]` marks vertices lying on that box
// (the at-infinity stand-in).
struct ConvexPolygon {
    std::vector<Point> vertices;
    std::vector<bool> on_box;

    bool empty() const { return vertices.size() < 3; }
    bool unbounded() const {
        for (bool b : on_box)
            if (b) return true;
        return false;
    }

    bool contains(const Point& p, double slack = 1e-9) const {
        std::size_t n = vertices.size();
        if (n < 3) return false;
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = vertices[i];
            const Point& b = vertices[(i + 1) % n];
            if (cross(b - a, p - a) < -slack * (1.0 + norm(b - a))) return false;
        }
        return true;
    }

    ConvexPolygon scaled(double factor) const {
        ConvexPolygon out = *this;
        for (Point& p : out.vertices) p = p * factor;
        return out;
    }

    // Intersection of the polygon with the line origin + t*dir, as an
    // interval [t_lo, t_hi] of the line parameter; empty -> nullopt.
    std::optional<std::pair<double, double>> line_clip(const Point& origin, const Vec2& dir) const {
        std::size_t n = vertices.size();
        if (n < 3) return std::nullopt;
        double tlo = -inf(), thi = inf();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = vertices[i];
            Vec2 e = vertices[(i + 1) % n] - a;
            // Interior is left of e: cross(e, x - a) >= 0.
            double denom = cross(e, dir);
            double num = cross(e, origin - a);
            if (std::fabs(denom) < 1e-14) {
                if (num < 0.0) return std::nullopt;
            } else if (denom > 0.0) {
                tlo = std::max(tlo, -num / denom);
            } else {
                thi = std::min(thi, -num / denom);
            }
        }
        if (tlo > thi) return std::nullopt;
        return std::make_pair(tlo, thi);
    }
};

inline ConvexPolygon box_polygon(double halfwidth, const Point& center = {0.0, 0.0}) {
    ConvexPolygon poly;
    poly.vertices = {{center.x - halfwidth, center.y - halfwidth},
                     {center.x + halfwidth, center.y - halfwidth},
                     {center.x + halfwidth, center.y + halfwidth},
                     {center.x - halfwidth, center.y + halfwidth}};
    poly.on_box = {true, true, true, true};
    return poly;
}

// Sutherland-Hodgman clip of a convex polygon against one halfplane.
// New vertices introduced on the cut line are tagged as interior (not box).
inline ConvexPolygon clip(const ConvexPolygon& poly, const Halfplane& h) {
    ConvexPolygon out;
    std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly.vertices[i];
        const Point& b = poly.vertices[(i + 1) % n];
        double va = h.signed_value(a);
        double vb = h.signed_value(b);
        bool ina = va >= 0.0, inb = vb >= 0.0;
        if (ina) {
            out.vertices.push_back(a);
            out.on_box.push_back(poly.on_box[i]);
        }
        if (ina != inb) {
            double t = va / (va - vb);
            out.vertices.push_back(a + (b - a) * t);
            out.on_box.push_back(false);
        }
    }
    return out;
}

struct FvdCell {
    Point site;
    ConvexPolygon region;
};

struct FvdEdge {
    std::size_t site_a = 0;
    std::size_t site_b = 0;
    Point a;
    Point b;
    bool a_at_infinity = false;  // endpoint clipped at the box
    bool b_at_infinity = false;
};

struct Fvd {
    std::vector<Point> sites;
    std::vector<FvdEdge> edges;
    std::map<std::size_t, FvdCell> cells;  // only nonempty (hull) cells
    double clip_halfwidth = 0.0;

    // Index of the site farthest from p (the cell owner), smallest index on ties.
    std::size_t farthest_site(const Point& p) const {
        std::size_t best = 0;
        double best_d = -1.0;
        for (std::size_t i = 0; i < sites.size(); ++i) {
            double d = dist2(p, sites[i]);
            if (d > best_d) { best_d = d; best = i; }
        }
        return best;
    }
};

inline double default_clip_halfwidth(const std::vector<Point>& pts) {
    Disc sed = smallest_enclosing_disc(pts);
    return 10.0 * (sed.radius + 10.0) + norm(sed.center);
}

// Farthest-point Voronoi diagram, built naively: each cell is the
// intersection of all dominance halfplanes, each edge the portion of a
// perpendicular bisector surviving every other site's dominance. O(n^3).
inline Fvd farthest_voronoi(const std::vector<Point>& points, double clip_halfwidth = 0.0) {
    if (points.size() < 2) throw std::invalid_argument("need at least 2 sites");
    double spread = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i)
        spread = std::max(spread, dist(points[0], points[i]));
    if (spread < eps()) throw std::invalid_argument("degenerate sites");

    Fvd fvd;
    fvd.sites = points;
    fvd.clip_halfwidth = clip_halfwidth > 0.0 ? clip_halfwidth : default_clip_halfwidth(points);
    std::size_t n = points.size();

    for (std::size_t i = 0; i < n; ++i) {
        ConvexPolygon cell = box_polygon(fvd.clip_halfwidth);
        for (std::size_t j = 0; j < n && !cell.empty(); ++j) {
            if (j == i || dist(points[i], points[j]) < eps()) continue;
            cell = clip(cell, farther_from(points[i], points[j]));
        }
        if (!cell.empty()) fvd.cells.emplace(i, FvdCell{points[i], cell});
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist(points[i], points[j]) < eps()) continue;
            Point mid = (points[i] + points[j]) * 0.5;
            Vec2 dir = normalized(perp(points[j] - points[i]));
            double tlo = -fvd.clip_halfwidth * 2.0, thi = fvd.clip_halfwidth * 2.0;
            const double t_init_lo = tlo, t_init_hi = thi;
            bool empty = false;
            for (std::size_t k = 0; k < n && !empty; ++k) {
                if (k == i || k == j) continue;
                Halfplane h = farther_from(points[i], points[k]);
                double denom = dot(h.normal, dir);
                double num = h.signed_value(mid);
                if (std::fabs(denom) < 1e-14) {
                    if (num < 0.0) empty = true;
                } else if (denom > 0.0) {
                    tlo = std::max(tlo, -num / denom);
                } else {
                    thi = std::min(thi, -num / denom);
                }
            }
            if (empty || tlo >= thi - 1e-12) continue;
            FvdEdge e;
            e.site_a = i;
            e.site_b = j;
            e.a = mid + dir * tlo;
            e.b = mid + dir * thi;
            e.a_at_infinity = tlo <= t_init_lo + 1e-9;
            e.b_at_infinity = thi >= t_init_hi - 1e-9;
            fvd.edges.push_back(e);
        }
    }
    return fvd;
}

}  // namespace sar
