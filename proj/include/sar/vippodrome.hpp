#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "sar/blocking.hpp"
#include "sar/geometry.hpp"

namespace sar {

// Query line/ray degenerate against a boundary piece (infinite overlap).
// Callers recover by resampling the query direction.
struct CollinearOverlap : std::runtime_error {
    CollinearOverlap() : std::runtime_error("collinear overlap") {}
};

enum class BoundaryPiece { RayLo, Arc, RayHi };

// A point on a vippodrome boundary. `param` is the signed arc length along
// the whole boundary, 0 at the arc midpoint, increasing towards the lo ray.
struct BoundaryPoint {
    BoundaryPiece piece = BoundaryPiece::Arc;
    double param = 0.0;
    Point pos;
};

// Translation-space region where one blocking constraint ("A before B") is
// active. Region = offset wedge (+) disc of radius 2; boundary = two rays
// joined smoothly by a circular arc of radius 2 about the wedge apex.
struct Vippodrome {
    int kind = 1;  // 1 or 2, per the two blocking conditions
    std::size_t pair_a = 0;
    std::size_t pair_b = 0;

    Point a_start, a_target, b_start, b_target;

    Wedge wedge;  // apex = a_start - b_target for both kinds
    static constexpr double kArcRadius = 2.0;
    double arc_radius = kArcRadius;  // 2 - eps for the strict-predicate variant

    const Point& arc_center() const { return wedge.apex; }
    double opening_angle() const { return wedge.opening_angle(); }

    // Arc geometry: central angle pi - theta, centered opposite the bisector.
    double arc_half_angle() const { return 0.5 * (kPi - opening_angle()); }
    double arc_mid_dir() const { return angle_of(wedge.bisector()) + kPi; }
    double arc_half_len() const { return arc_radius * arc_half_angle(); }

    Vec2 ray_lo_origin() const { return arc_center() + arc_radius * rotated(wedge.dir_lo, -kPi / 2.0); }
    Vec2 ray_hi_origin() const { return arc_center() + arc_radius * rotated(wedge.dir_hi, kPi / 2.0); }

    BoundaryPiece piece_at(double s) const {
        double ah = arc_half_len();
        if (s > ah) return BoundaryPiece::RayLo;
        if (s < -ah) return BoundaryPiece::RayHi;
        return BoundaryPiece::Arc;
    }

    Point boundary_point(double s) const {
        double ah = arc_half_len();
        if (s > ah) return ray_lo_origin() + wedge.dir_lo * (s - ah);
        if (s < -ah) return ray_hi_origin() + wedge.dir_hi * (-s - ah);
        return arc_center() + arc_radius * dir_from_angle(arc_mid_dir() + s / arc_radius);
    }

    BoundaryPoint boundary_at(double s) const { return {piece_at(s), s, boundary_point(s)}; }

    // Membership of the closed region via the defining blocking predicate.
    bool contains(const Vec2& v) const {
        double limit = 2.0 + eps();
        if (kind == 1)
            return dist2_point_segment(a_start, b_start, b_target + v) <= limit * limit;
        return dist2_point_segment(b_target + v, a_start, a_target + v) <= limit * limit;
    }

    // Strict-interior membership, matching the TBG edge convention.
    bool contains_interior(const Vec2& v) const {
        if (kind == 1)
            return disc_blocks_segment(a_start, Segment{b_start, b_target + v});
        return disc_blocks_segment(b_target + v, Segment{a_start, a_target + v});
    }

    // Membership from the wedge (+) disc construction (cross-checked against
    // the predicate form by the property tests).
    bool geo_contains(const Vec2& v, double slack = 0.0) const {
        return wedge.distance(v) <= arc_radius + slack;
    }
};

inline Vippodrome make_vippodrome(const Point& a_start, const Point& a_target,
                                  const Point& b_start, const Point& b_target,
                                  int kind, std::size_t pair_a = 0, std::size_t pair_b = 0,
                                  double arc_radius = Vippodrome::kArcRadius) {
    Vippodrome vip;
    vip.kind = kind;
    vip.pair_a = pair_a;
    vip.pair_b = pair_b;
    vip.a_start = a_start;
    vip.a_target = a_target;
    vip.b_start = b_start;
    vip.b_target = b_target;
    vip.arc_radius = arc_radius;
    Point apex = a_start - b_target;
    if (kind == 1) {
        Wedge w = inner_tangent_wedge(a_start, b_start, arc_radius);
        vip.wedge = Wedge{apex, w.dir_lo, w.dir_hi};
    } else {
        Wedge w = inner_tangent_wedge(b_target, a_target, arc_radius);
        vip.wedge = Wedge{apex, -w.dir_lo, -w.dir_hi};
    }
    return vip;
}

inline bool vip_contains(const Vippodrome& vip, const Vec2& v) { return vip.contains(v); }

// ---------------------------------------------------------------------------
// Boundary intersection machinery
// ---------------------------------------------------------------------------

struct LineHit {
    double t = 0.0;  // parameter along the query line
    BoundaryPoint bp;
};

namespace detail {

// Signed boundary parameter of a point known to lie on the arc circle,
// or nullopt if its angle falls outside the arc's angular range.
inline std::optional<double> arc_param_of(const Vippodrome& vip, const Point& p, double ang_slack = 1e-9) {
    double ah = vip.arc_half_angle();
    if (ah <= 0.0) return std::nullopt;
    double d = wrap_angle(angle_of(p - vip.arc_center()) - vip.arc_mid_dir());
    if (d > kPi) d -= 2.0 * kPi;  // now in (-pi, pi]
    if (std::fabs(d) > ah + ang_slack) return std::nullopt;
    return std::clamp(d, -ah, ah) * vip.arc_radius;
}

// Intersection of the query line o + t*d with one boundary ray, reported as
// (t, u) with u >= 0 the distance along the boundary ray.
inline std::optional<std::pair<double, double>>
line_vs_ray(const Point& o, const Vec2& d, const Point& ray_origin, const Vec2& ray_dir) {
    double denom = cross(d, ray_dir);
    Vec2 w = ray_origin - o;
    if (std::fabs(denom) < 1e-13) {
        if (std::fabs(cross(d, w)) < 1e-9) throw CollinearOverlap{};
        return std::nullopt;
    }
    // Solve o + t*d = ray_origin + u*ray_dir.
    double t = cross(w, ray_dir) / denom;
    double u = cross(w, d) / denom;
    if (u < -1e-12) return std::nullopt;
    return std::make_pair(t, std::max(u, 0.0));
}

// t-parameters where the query line meets the circle |x - c| = r.
inline std::vector<double> line_vs_circle(const Point& o, const Vec2& d, const Point& c, double r) {
    Vec2 w = o - c;
    return solve_quadratic(norm2(d), 2.0 * dot(d, w), norm2(w) - r * r);
}

inline void dedup_hits(std::vector<LineHit>& hits) {
    std::sort(hits.begin(), hits.end(), [](const LineHit& a, const LineHit& b) { return a.t < b.t; });
    std::vector<LineHit> out;
    for (const LineHit& h : hits) {
        if (!out.empty() && dist(out.back().bp.pos, h.bp.pos) <= 1e-9) continue;
        out.push_back(h);
    }
    hits = std::move(out);
}

}  // namespace detail

// All intersections of the query line (or ray, if `ray_only`) from `o` in
// direction `d` with the three boundary pieces, sorted along the query.
// Tangential grazing is reported once.
inline std::vector<LineHit> boundary_line_hits(const Vippodrome& vip, const Point& o, const Vec2& d,
                                               bool ray_only = false) {
    std::vector<LineHit> hits;
    double ah = vip.arc_half_len();

    if (auto lo = detail::line_vs_ray(o, d, vip.ray_lo_origin(), vip.wedge.dir_lo))
        hits.push_back({lo->first, {BoundaryPiece::RayLo, ah + lo->second, o + d * lo->first}});
    if (auto hi = detail::line_vs_ray(o, d, vip.ray_hi_origin(), vip.wedge.dir_hi))
        hits.push_back({hi->first, {BoundaryPiece::RayHi, -ah - hi->second, o + d * hi->first}});
    for (double t : detail::line_vs_circle(o, d, vip.arc_center(), vip.arc_radius)) {
        Point p = o + d * t;
        if (auto s = detail::arc_param_of(vip, p)) hits.push_back({t, {BoundaryPiece::Arc, *s, p}});
    }

    detail::dedup_hits(hits);
    if (ray_only) {
        hits.erase(std::remove_if(hits.begin(), hits.end(), [](const LineHit& h) { return h.t < -1e-12; }),
                   hits.end());
    }
    return hits;
}

struct PairHit {
    Point pos;
    double param_a = 0.0;  // boundary parameter on the first vippodrome
    double param_b = 0.0;  // boundary parameter on the second
    bool overlap = false;  // endpoint of a shared (overlapping) arc portion
};

namespace detail {

struct BoundaryRay {
    Point origin;
    Vec2 dir;
    double base_param;  // boundary parameter at the ray origin
    double sign;        // +1 on the lo ray, -1 on the hi ray
    BoundaryPiece piece;
};

inline std::array<BoundaryRay, 2> boundary_rays(const Vippodrome& vip) {
    double ah = vip.arc_half_len();
    return {BoundaryRay{vip.ray_lo_origin(), vip.wedge.dir_lo, ah, +1.0, BoundaryPiece::RayLo},
            BoundaryRay{vip.ray_hi_origin(), vip.wedge.dir_hi, -ah, -1.0, BoundaryPiece::RayHi}};
}

inline void push_pair_hit(std::vector<PairHit>& out, const Point& p, double sa, double sb, bool overlap) {
    for (const PairHit& h : out)
        if (dist(h.pos, p) <= 1e-9) return;
    out.push_back({p, sa, sb, overlap});
}

}  // namespace detail

// Transversal intersection points of two vippodrome boundaries (at most four
// by the pairwise-intersection bound). Coinciding circular portions (the
// shared-arc case of the two vippodromes of one ordered pair) are reported
// via their overlap endpoints, tagged `overlap = true`. Collinear
// overlapping rays raise CollinearOverlap.
inline std::vector<PairHit> boundary_pair_hits(const Vippodrome& va, const Vippodrome& vb) {
    std::vector<PairHit> out;
    auto rays_a = detail::boundary_rays(va);
    auto rays_b = detail::boundary_rays(vb);

    // ray-ray
    for (const auto& ra : rays_a) {
        for (const auto& rb : rays_b) {
            double denom = cross(ra.dir, rb.dir);
            Vec2 w = rb.origin - ra.origin;
            if (std::fabs(denom) < 1e-13) {
                if (std::fabs(cross(ra.dir, w)) < 1e-9) throw CollinearOverlap{};
                continue;
            }
            double ua = cross(w, rb.dir) / denom;
            double ub = cross(w, ra.dir) / denom;
            if (ua < -1e-12 || ub < -1e-12) continue;
            Point p = ra.origin + ra.dir * std::max(ua, 0.0);
            detail::push_pair_hit(out, p, ra.base_param + ra.sign * std::max(ua, 0.0),
                                  rb.base_param + rb.sign * std::max(ub, 0.0), false);
        }
    }

    // ray-arc, both directions
    auto ray_vs_arc = [&out](const detail::BoundaryRay& ray, const Vippodrome& arc_vip, bool ray_is_first) {
        for (double u : detail::line_vs_circle(ray.origin, ray.dir, arc_vip.arc_center(), arc_vip.arc_radius)) {
            if (u < -1e-12) continue;
            Point p = ray.origin + ray.dir * std::max(u, 0.0);
            auto s_arc = detail::arc_param_of(arc_vip, p);
            if (!s_arc) continue;
            double s_ray = ray.base_param + ray.sign * std::max(u, 0.0);
            if (ray_is_first)
                detail::push_pair_hit(out, p, s_ray, *s_arc, false);
            else
                detail::push_pair_hit(out, p, *s_arc, s_ray, false);
        }
    };
    for (const auto& ra : rays_a) ray_vs_arc(ra, vb, true);
    for (const auto& rb : rays_b) ray_vs_arc(rb, va, false);

    // arc-arc (same-radius boundaries; all paper objects use radius 2)
    const Point ca = va.arc_center(), cb = vb.arc_center();
    const double r = va.arc_radius;
    double d = dist(ca, cb);
    if (d <= 1e-9) {
        // Same supporting circle: report the overlap endpoints of the two
        // angular ranges (each range endpoint lying on the other arc).
        for (double sa : {-va.arc_half_len(), va.arc_half_len()}) {
            Point p = va.boundary_point(sa);
            if (auto sb = detail::arc_param_of(vb, p)) detail::push_pair_hit(out, p, sa, *sb, true);
        }
        for (double sb : {-vb.arc_half_len(), vb.arc_half_len()}) {
            Point p = vb.boundary_point(sb);
            if (auto sa = detail::arc_param_of(va, p)) detail::push_pair_hit(out, p, *sa, sb, true);
        }
    } else if (d <= 2.0 * r) {
        Vec2 u = (cb - ca) / d;
        double h2 = r * r - 0.25 * d * d;
        double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
        Point mid = (ca + cb) * 0.5;
        for (double sgn : {+1.0, -1.0}) {
            Point p = mid + perp(u) * (sgn * h);
            auto sa = detail::arc_param_of(va, p);
            auto sb = detail::arc_param_of(vb, p);
            if (sa && sb) detail::push_pair_hit(out, p, *sa, *sb, false);
            if (h == 0.0) break;
        }
    }

    std::sort(out.begin(), out.end(), [](const PairHit& x, const PairHit& y) { return x.param_a < y.param_a; });
    return out;
}

// ---------------------------------------------------------------------------
// Objective extrema along a boundary
// ---------------------------------------------------------------------------

struct DistanceTo {
    Point p;
};
struct AabrArea {
    Rect rect_s;  // AABR(D(S))
    Rect rect_t;  // AABR(D(T)), pre-translation
};
using BoundaryObjective = std::variant<DistanceTo, AabrArea>;

inline double aabr_area_at(const Rect& rs, const Rect& rt, const Vec2& v) {
    double w = std::max(rs.xhi, rt.xhi + v.x) - std::min(rs.xlo, rt.xlo + v.x);
    double h = std::max(rs.yhi, rt.yhi + v.y) - std::min(rs.ylo, rt.ylo + v.y);
    return w * h;
}

namespace detail {

inline void push_param(std::vector<double>& out, double s) {
    for (double q : out)
        if (std::fabs(q - s) <= 1e-10 * (1.0 + std::fabs(s))) return;
    out.push_back(s);
}

// Local extrema of the distance to `p` along the boundary; closed form per
// piece. When p is the arc center the whole arc is equidistant and a single
// representative point (the arc midpoint) is returned.
inline std::vector<double> distance_extrema(const Vippodrome& vip, const Point& p) {
    std::vector<double> out;
    if (dist(p, vip.arc_center()) <= eps()) {
        out.push_back(0.0);
        return out;
    }
    for (const auto& ray : boundary_rays(vip)) {
        double u = dot(p - ray.origin, ray.dir);
        if (u >= 0.0) push_param(out, ray.base_param + ray.sign * u);
    }
    double base = angle_of(p - vip.arc_center());
    for (double ang : {base, base + kPi}) {
        Point q = vip.arc_center() + vip.arc_radius * dir_from_angle(ang);
        if (auto s = arc_param_of(vip, q)) push_param(out, *s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Local extrema of the AABR area along the boundary. The area is piecewise
// {constant, linear, hyperbolic-paraboloid} over the partition induced by
// the four breakpoint lines, so each boundary piece is split at the
// crossings with those lines first.
inline std::vector<double> aabr_extrema(const Vippodrome& vip, const Rect& rs, const Rect& rt) {
    const double xb1 = rs.xlo - rt.xlo, xb2 = rs.xhi - rt.xhi;
    const double yb1 = rs.ylo - rt.ylo, yb2 = rs.yhi - rt.yhi;

    // Split parameters: L-crossings and piece junctions.
    std::vector<double> splits;
    double ah = vip.arc_half_len();
    push_param(splits, -ah);
    push_param(splits, ah);
    auto add_line_hits = [&](const Point& o, const Vec2& d) {
        for (const LineHit& h : boundary_line_hits(vip, o, d)) push_param(splits, h.bp.param);
    };
    for (double xb : {xb1, xb2}) add_line_hits({xb, 0.0}, {0.0, 1.0});
    for (double yb : {yb1, yb2}) add_line_hits({0.0, yb}, {1.0, 0.0});
    std::sort(splits.begin(), splits.end());

    // Extent along the rays beyond which the area is monotone increasing:
    // past the last breakpoint both factors grow with |v|.
    double reach = 10.0 + std::max({std::fabs(xb1), std::fabs(xb2), std::fabs(yb1), std::fabs(yb2)}) +
                   norm(vip.arc_center()) + 4.0;
    std::vector<double> bounds{-reach};
    for (double s : splits)
        if (s > -reach && s < reach) bounds.push_back(s);
    bounds.push_back(reach);

    auto slope_sign = [](double v, double b1, double b2) {
        double lo = std::min(b1, b2), hi = std::max(b1, b2);
        if (v < lo) return -1;
        if (v > hi) return +1;
        return 0;
    };

    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        double slo = bounds[i], shi = bounds[i + 1];
        if (shi - slo < 1e-12) continue;
        Point m = vip.boundary_point(0.5 * (slo + shi));
        int wb = slope_sign(m.x, xb1, xb2);
        int hb = slope_sign(m.y, yb1, yb2);
        double wa = (std::max(rs.xhi, m.x + rt.xhi) - std::min(rs.xlo, m.x + rt.xlo)) - wb * m.x;
        double ha = (std::max(rs.yhi, m.y + rt.yhi) - std::min(rs.ylo, m.y + rt.ylo)) - hb * m.y;

        if (vip.piece_at(0.5 * (slo + shi)) != BoundaryPiece::Arc) {
            // phi(s) = (wa + wb*x(s)) * (ha + hb*y(s)) with x, y affine in s.
            Point p0 = vip.boundary_point(slo), p1 = vip.boundary_point(shi);
            Vec2 dir = (p1 - p0) / (shi - slo);
            double A = wb * dir.x * hb * dir.y;
            double w0 = wa + wb * p0.x, h0 = ha + hb * p0.y;
            double B = w0 * hb * dir.y + h0 * wb * dir.x;
            if (std::fabs(A) > 1e-14) {
                double ds = -B / (2.0 * A);
                if (ds > 1e-12 && ds < shi - slo - 1e-12) push_param(out, slo + ds);
            }
        } else {
            double c1 = wa + wb * vip.arc_center().x;
            double c2 = ha + hb * vip.arc_center().y;
            double mid = vip.arc_mid_dir();
            auto dphi = [&](double s) {
                double u = mid + s / vip.arc_radius;
                double cu = std::cos(u), su = std::sin(u);
                double w = c1 + wb * vip.arc_radius * cu;
                double h = c2 + hb * vip.arc_radius * su;
                return -wb * su * h + hb * cu * w;
            };
            for (double s : bracketed_roots(dphi, slo + 1e-12, shi - 1e-12)) push_param(out, s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// All local extrema of the restricted objective along the boundary,
// reported as boundary points.
inline std::vector<BoundaryPoint> boundary_extrema(const Vippodrome& vip, const BoundaryObjective& obj) {
    std::vector<double> params;
    if (const auto* d = std::get_if<DistanceTo>(&obj))
        params = detail::distance_extrema(vip, d->p);
    else if (const auto* a = std::get_if<AabrArea>(&obj))
        params = detail::aabr_extrema(vip, a->rect_s, a->rect_t);
    std::vector<BoundaryPoint> out;
    out.reserve(params.size());
    for (double s : params) out.push_back(vip.boundary_at(s));
    return out;
}

// Intersection of the vippodrome region with the line o + t*d, as a single
// interval (the region is convex); endpoints may be infinite. nullopt when
// the line misses the region or only grazes it.
inline std::optional<std::pair<double, double>> vip_line_interval(const Vippodrome& vip, const Point& o,
                                                                  const Vec2& d) {
    std::vector<LineHit> hits = boundary_line_hits(vip, o, d);
    double slack = 1e-9;
    if (hits.empty()) {
        if (vip.geo_contains(o, -slack)) return std::make_pair(-inf(), inf());
        return std::nullopt;
    }
    std::vector<double> ts;
    ts.reserve(hits.size());
    for (const LineHit& h : hits) ts.push_back(h.t);

    // Probe the open cells between consecutive hits; convexity makes the
    // inside cells contiguous.
    std::vector<double> probes;
    probes.push_back(ts.front() - 1.0);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) probes.push_back(0.5 * (ts[i] + ts[i + 1]));
    probes.push_back(ts.back() + 1.0);

    int first_in = -1, last_in = -1;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        if (vip.geo_contains(o + d * probes[i], -slack)) {
            if (first_in < 0) first_in = static_cast<int>(i);
            last_in = static_cast<int>(i);
        }
    }
    if (first_in < 0) return std::nullopt;  // tangential graze only
    double tlo = first_in == 0 ? -inf() : ts[first_in - 1];
    double thi = last_in == static_cast<int>(probes.size()) - 1 ? inf() : ts[last_in];
    return std::make_pair(tlo, thi);
}

}  // namespace sar
