#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sar/core.hpp"

namespace sar {

struct Disc {
    Point center;
    double radius = 0.0;

    bool contains(const Point& p, double slack = 0.0) const {
        return dist(center, p) <= radius + slack;
    }
};

struct Segment {
    Point a;
    Point b;
};

// Convex cone: apex + nonnegative combinations of dir_lo/dir_hi, sweeping
// counterclockwise from dir_lo to dir_hi. Opening angle in (0, pi].
struct Wedge {
    Point apex;
    Vec2 dir_lo;
    Vec2 dir_hi;

    double opening_angle() const {
        double a = wrap_angle(angle_of(dir_hi) - angle_of(dir_lo));
        // An opening of exactly pi wraps to 0; disambiguate via opposition.
        if (a < 1e-12 && dot(dir_lo, dir_hi) < 0.0) return kPi;
        return a;
    }

    Vec2 bisector() const {
        double half = 0.5 * opening_angle();
        return rotated(dir_lo, half);
    }

    bool contains(const Point& p, double slack = 0.0) const {
        Vec2 w = p - apex;
        return cross(dir_lo, w) >= -slack && cross(dir_hi, w) <= slack;
    }

    // Euclidean distance from p to the (closed, convex) wedge region.
    double distance(const Point& p) const {
        if (contains(p)) return 0.0;
        Vec2 w = p - apex;
        double best = norm(w);
        for (const Vec2& d : {dir_lo, dir_hi}) {
            double t = dot(w, d);
            if (t > 0.0) best = std::min(best, norm(w - d * t));
        }
        return best;
    }
};

struct Configuration {
    std::vector<Point> points;
    std::vector<std::string> labels;  // empty or aligned with points

    std::size_t size() const { return points.size(); }
    bool labeled() const { return !labels.empty(); }
};

// A configuration is valid when all unit discs are interior-disjoint:
// every pairwise center distance is at least 2 (up to eps).
inline bool is_valid_configuration(const Configuration& c) {
    double min_d2 = (2.0 - eps()) * (2.0 - eps());
    for (std::size_t i = 0; i < c.points.size(); ++i)
        for (std::size_t j = i + 1; j < c.points.size(); ++j)
            if (dist2(c.points[i], c.points[j]) < min_d2) return false;
    if (c.labeled()) {
        if (c.labels.size() != c.points.size()) return false;
        std::vector<std::string> ls = c.labels;
        std::sort(ls.begin(), ls.end());
        if (std::adjacent_find(ls.begin(), ls.end()) != ls.end()) return false;
    }
    return true;
}

// True iff the open unit disc at c meets the open region swept by a unit
// disc translating along seg. Tangency (distance exactly 2) does not block.
inline bool disc_blocks_segment(const Point& c, const Segment& seg) {
    double limit = 2.0 - eps();
    return dist2_point_segment(c, seg.a, seg.b) < limit * limit;
}

// Wedge of the two inner tangents of D(b) and D(a), apex at a, rays directed
// from b towards a. Opening angle 2*asin(2/dist); exactly pi for tangent
// discs, where the wedge degenerates to a halfplane. `radius` generalizes
// the clearance: asin(radius/dist) half-angle, used for the strict-predicate
// variant of the constraint regions.
inline Wedge inner_tangent_wedge(const Point& a, const Point& b, double radius = 2.0) {
    double d = dist(a, b);
    if (d < 2.0 - eps()) throw std::invalid_argument("overlapping discs");
    double half = std::asin(std::min(1.0, radius / d));
    Vec2 u = (a - b) / d;
    return Wedge{a, rotated(u, -half), rotated(u, half)};
}

// All unordered pairs of configuration points at distance <= threshold.
// With threshold 2*sqrt(2) this is a small superset of the Delaunay/Gabriel
// neighbor pairs whose inner tangents matter for direction selection.
inline std::vector<std::pair<std::size_t, std::size_t>>
close_pairs(const Configuration& c, double threshold) {
    if (threshold < 2.0 - eps()) throw std::invalid_argument("threshold below disc diameter");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    double t2 = threshold * threshold;
    for (std::size_t i = 0; i < c.points.size(); ++i)
        for (std::size_t j = i + 1; j < c.points.size(); ++j)
            if (dist2(c.points[i], c.points[j]) <= t2) out.emplace_back(i, j);
    return out;
}

// Axis-aligned rectangle [xlo, xhi] x [ylo, yhi].
struct Rect {
    double xlo = 0.0, xhi = 0.0, ylo = 0.0, yhi = 0.0;

    double width() const { return xhi - xlo; }
    double height() const { return yhi - ylo; }
    double area() const { return width() * height(); }
};

// Bounding rectangle of the unit discs centered at the given points.
inline Rect aabr_of_discs(const std::vector<Point>& pts) {
    Rect r{inf(), -inf(), inf(), -inf()};
    for (const Point& p : pts) {
        r.xlo = std::min(r.xlo, p.x - 1.0);
        r.xhi = std::max(r.xhi, p.x + 1.0);
        r.ylo = std::min(r.ylo, p.y - 1.0);
        r.yhi = std::max(r.yhi, p.y + 1.0);
    }
    return r;
}

}  // namespace sar
