#pragma once

#include <vector>

#include "sar/geometry.hpp"

namespace sar {

namespace detail {

inline Disc circum_disc(const Point& a, const Point& b) {
    Point c = (a + b) * 0.5;
    return Disc{c, dist(a, b) * 0.5};
}

// Circle through three points; falls back to the best diametral pair when
// the points are (nearly) collinear.
inline Disc circum_disc(const Point& a, const Point& b, const Point& c) {
    Vec2 ab = b - a, ac = c - a;
    double d = 2.0 * cross(ab, ac);
    double scale = std::max({norm2(ab), norm2(ac), 1.0});
    if (std::fabs(d) < 1e-14 * scale) {
        Disc best = circum_disc(a, b);
        for (const Disc& cand : {circum_disc(a, c), circum_disc(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    double ab2 = norm2(ab), ac2 = norm2(ac);
    Point center{a.x + (ac.y * ab2 - ab.y * ac2) / d,
                 a.y + (ab.x * ac2 - ac.x * ab2) / d};
    return Disc{center, dist(center, a)};
}

inline bool in_disc(const Disc& d, const Point& p) {
    return dist(d.center, p) <= d.radius * (1.0 + 1e-12) + 1e-12;
}

}  // namespace detail

// Smallest enclosing disc of a point set (Welzl, move-to-front, with a
// deterministic shuffle so results do not depend on input order quirks).
inline Disc smallest_enclosing_disc(const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    std::vector<Point> pts = points;
    Rng rng(0x5edu);
    for (std::size_t i = pts.size(); i > 1; --i)
        std::swap(pts[i - 1], pts[rng.index(i)]);

    Disc d{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (detail::in_disc(d, pts[i])) continue;
        d = Disc{pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (detail::in_disc(d, pts[j])) continue;
            d = detail::circum_disc(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (detail::in_disc(d, pts[k])) continue;
                d = detail::circum_disc(pts[i], pts[j], pts[k]);
            }
        }
    }
    return d;
}

}  // namespace sar
