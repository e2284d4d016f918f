#pragma once

// Test-only brute-force oracles, independent of the library's solution
// paths: enumeration-based enclosing discs, direct predicate evaluation,
// dense scans, and factorial itinerary search.

#include <algorithm>
#include <vector>

#include "sar/blocking.hpp"
#include "sar/enclosing.hpp"
#include "sar/geometry.hpp"
#include "sar/instances.hpp"

namespace oracle {

using namespace sar;

// Smallest enclosing disc by enumerating all pair and triple circles.
inline Disc sed_brute_force(const std::vector<Point>& pts) {
    auto contains_all = [&](const Disc& d) {
        for (const Point& p : pts)
            if (dist(d.center, p) > d.radius + 1e-9) return false;
        return true;
    };
    Disc best{pts[0], 0.0};
    if (pts.size() == 1) return best;
    best.radius = inf();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Disc d{(pts[i] + pts[j]) * 0.5, 0.5 * dist(pts[i], pts[j])};
            if (d.radius < best.radius && contains_all(d)) best = d;
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                Vec2 ab = pts[j] - pts[i], ac = pts[k] - pts[i];
                double den = 2.0 * cross(ab, ac);
                if (std::fabs(den) < 1e-12) continue;
                Point c{pts[i].x + (ac.y * norm2(ab) - ab.y * norm2(ac)) / den,
                        pts[i].y + (ab.x * norm2(ac) - ac.x * norm2(ab)) / den};
                Disc t{c, dist(c, pts[i])};
                if (t.radius < best.radius && contains_all(t)) best = t;
            }
        }
    }
    return best;
}

// Direct evaluation of the two blocking conditions, written independently
// of blocks_before.
inline bool blocking_edge_direct(const Point& as, const Point& at, const Point& bs, const Point& bt,
                                 const Vec2& v) {
    double lim = 2.0 - eps();
    bool c1 = dist2_point_segment(as, bs, bt + v) < lim * lim;
    bool c2 = dist2_point_segment(bt + v, as, at + v) < lim * lim;
    return c1 || c2;
}

// Exhaustive search over all n! move orders.
inline bool feasible_by_enumeration(const Configuration& s, const Configuration& t, const Matching& m,
                                    const Vec2& v) {
    std::vector<std::size_t> order(m.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    do {
        Itinerary it;
        it.order = order;
        it.translation = v;
        if (validate_itinerary(s, t, m, v, it)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

// Random valid configuration in a square, by rejection.
inline Configuration random_configuration(std::size_t n, Rng& rng, double density_side_factor = 2.8) {
    Configuration c;
    double side = density_side_factor * std::sqrt(static_cast<double>(n)) + 2.0;
    std::size_t guard = 0;
    while (c.points.size() < n) {
        if (++guard > 200000) throw std::runtime_error("oracle rejection sampling stuck");
        Point p{rng.uniform(0.0, side), rng.uniform(0.0, side)};
        bool ok = true;
        for (const Point& q : c.points)
            if (dist2(p, q) < 4.0) { ok = false; break; }
        if (ok) c.points.push_back(p);
    }
    return c;
}

// Random labeled problem with both configurations in the same box and a
// random bijection.
struct RandomInstance {
    Configuration s, t;
    Matching m;
};

inline RandomInstance random_labeled_instance(std::size_t n, Rng& rng) {
    RandomInstance ri;
    ri.s = random_configuration(n, rng);
    ri.t = random_configuration(n, rng);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);
    for (std::size_t i = 0; i < n; ++i) ri.m.pairs.emplace_back(i, perm[i]);
    return ri;
}

// Minimum of `objective` over the valid grid points of an axis-aligned box;
// validity tested per point via the TBG route.
struct GridMinimum {
    bool found = false;
    Vec2 v;
    double value = inf();
    double cell_diagonal = 0.0;
};

template <typename Objective>
inline GridMinimum grid_minimum(const Configuration& s, const Configuration& t, const Matching& m,
                                const Rect& box, int nx, int ny, Objective&& objective) {
    GridMinimum out;
    double dx = box.width() / (nx - 1);
    double dy = box.height() / (ny - 1);
    out.cell_diagonal = std::hypot(dx, dy);
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            Vec2 v{box.xlo + dx * i, box.ylo + dy * j};
            if (!is_acyclic(build_tbg(s, t, m, v))) continue;
            double val = objective(v);
            if (!out.found || val < out.value) {
                out.found = true;
                out.v = v;
                out.value = val;
            }
        }
    }
    return out;
}

inline double sed_point_radius(const Configuration& s, const Configuration& t, const Vec2& v) {
    std::vector<Point> pts = s.points;
    for (const Point& p : t.points) pts.push_back(p + v);
    return smallest_enclosing_disc(pts).radius;
}

// Box guaranteed to contain the given candidate translations plus padding.
inline Rect candidate_box(const std::vector<Vec2>& candidates, double pad) {
    Rect box{inf(), -inf(), inf(), -inf()};
    for (const Vec2& v : candidates) {
        box.xlo = std::min(box.xlo, v.x);
        box.xhi = std::max(box.xhi, v.x);
        box.ylo = std::min(box.ylo, v.y);
        box.yhi = std::max(box.yhi, v.y);
    }
    box.xlo -= pad;
    box.xhi += pad;
    box.ylo -= pad;
    box.yhi += pad;
    return box;
}

}  // namespace oracle
