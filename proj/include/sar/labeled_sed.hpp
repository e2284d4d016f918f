#pragma once

// Smallest-enclosing-disc minimization for LabeledProblem. The optimum is
// classified by the composition of the optimal disc's support set:
//   (i)   all support points from one set            -> region V(xi)
//   (ii)  two from one set, one from the other       -> FVD-edge sandwich
//   (iii) a diametral pair, one point from each set  -> halfplane polygon K
// Candidates from every case are evaluated with the true enclosing radius
// and the valid minimum is returned. Radii follow the point convention
// (enclosing disc of the unit discs is larger by 1).

#include "sar/labeled.hpp"

namespace sar {

namespace detail {

struct Frame {
    Point origin;
    Vec2 ex, ey;
    double x(const Point& p) const { return dot(p - origin, ex); }
    double y(const Point& p) const { return dot(p - origin, ey); }
    double dx(const Vec2& d) const { return dot(d, ex); }
    double dy(const Vec2& d) const { return dot(d, ey); }
};

// One boundary piece as an analytic curve; ray pieces extend affinely
// beyond their range so exact-quadratic interpolation can sample anywhere.
struct BoundaryPieceFn {
    bool is_arc = false;
    double s_lo = 0.0, s_hi = 0.0;
    Point ray_origin;  // rays
    Vec2 ray_dir;
    double ray_base = 0.0, ray_sign = 1.0;
    Point arc_center;  // arc
    double arc_mid = 0.0;
    double arc_radius = Vippodrome::kArcRadius;

    Point at(double s) const {
        if (is_arc) return arc_center + arc_radius * dir_from_angle(arc_mid + s / arc_radius);
        return ray_origin + ray_dir * (ray_sign * (s - ray_base));
    }
    Vec2 tangent(double s) const {
        if (is_arc) return dir_from_angle(arc_mid + s / arc_radius + kPi / 2.0);
        return ray_dir * ray_sign;
    }
};

inline std::vector<BoundaryPieceFn> boundary_pieces(const Vippodrome& vip) {
    double ah = vip.arc_half_len();
    std::vector<BoundaryPieceFn> pieces;
    BoundaryPieceFn hi;
    hi.s_lo = -inf();
    hi.s_hi = -ah;
    hi.ray_origin = vip.ray_hi_origin();
    hi.ray_dir = vip.wedge.dir_hi;
    hi.ray_base = -ah;
    hi.ray_sign = -1.0;
    pieces.push_back(hi);
    if (ah > 1e-12) {
        BoundaryPieceFn arc;
        arc.is_arc = true;
        arc.s_lo = -ah;
        arc.s_hi = ah;
        arc.arc_center = vip.arc_center();
        arc.arc_mid = vip.arc_mid_dir();
        arc.arc_radius = vip.arc_radius;
        pieces.push_back(arc);
    }
    BoundaryPieceFn lo;
    lo.s_lo = ah;
    lo.s_hi = inf();
    lo.ray_origin = vip.ray_lo_origin();
    lo.ray_dir = vip.wedge.dir_lo;
    lo.ray_base = ah;
    lo.ray_sign = 1.0;
    pieces.push_back(lo);
    return pieces;
}

// Roots of fn on the piece. On ray pieces fn must be an exact quadratic in
// the boundary parameter (recovered by interpolation); on the arc it is a
// low-degree trigonometric polynomial handled by bracketing.
inline std::vector<double> piece_roots(const BoundaryPieceFn& piece, const std::function<double(double)>& fn) {
    std::vector<double> out;
    if (piece.is_arc) {
        for (double s : bracketed_roots(fn, piece.s_lo, piece.s_hi)) out.push_back(s);
        return out;
    }
    double s0 = std::isinf(piece.s_lo) ? piece.s_hi - 2.0 : piece.s_lo;
    double f0 = fn(s0), f1 = fn(s0 + 1.0), f2 = fn(s0 + 2.0);
    double a = 0.5 * (f2 - 2.0 * f1 + f0);
    double b = f1 - f0 - a;
    for (double u : solve_quadratic(a, b, f0)) {
        double s = s0 + u;
        if (s >= piece.s_lo - 1e-9 && s <= piece.s_hi + 1e-9) out.push_back(std::clamp(s, piece.s_lo, piece.s_hi));
    }
    return out;
}

inline void push_sorted_unique(std::vector<double>& v, double x) {
    for (double q : v)
        if (std::fabs(q - x) <= 1e-10 * (1.0 + std::fabs(x))) return;
    v.push_back(x);
}

// Intersection angles of the circle (center, radius) with a vippodrome
// boundary, reported as angles on the query circle.
inline std::vector<double> circle_boundary_hit_angles(const Vippodrome& vip, const Point& center,
                                                      double radius) {
    std::vector<double> angles;
    for (const auto& ray : boundary_rays(vip)) {
        for (double u : line_vs_circle(ray.origin, ray.dir, center, radius)) {
            if (u < -1e-12) continue;
            Point p = ray.origin + ray.dir * std::max(u, 0.0);
            angles.push_back(angle_of(p - center));
        }
    }
    double d = dist(center, vip.arc_center());
    double r2 = vip.arc_radius;
    if (d > 1e-12 && d <= radius + r2 && d >= std::fabs(radius - r2)) {
        Vec2 u = (vip.arc_center() - center) / d;
        double a = (radius * radius - r2 * r2 + d * d) / (2.0 * d);
        double h2 = radius * radius - a * a;
        double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
        Point base = center + u * a;
        for (double sgn : {+1.0, -1.0}) {
            Point p = base + perp(u) * (sgn * h);
            if (arc_param_of(vip, p)) angles.push_back(angle_of(p - center));
            if (h == 0.0) break;
        }
    }
    return angles;
}

}  // namespace detail

inline void LabeledProblem::sed_case_i(SedCandidates& c) const {
    // wlog the larger disc stays put; translations placing the smaller set
    // inside it form the intersection of equal-radius discs.
    Disc sed_s = smallest_enclosing_disc(s_.points);
    Disc sed_t = smallest_enclosing_disc(t_.points);
    bool s_larger = sed_s.radius >= sed_t.radius;
    double radius = s_larger ? sed_s.radius : sed_t.radius;

    std::vector<Point> centers;
    if (s_larger) {
        for (const Point& t : t_.points) centers.push_back(sed_s.center - t);
    } else {
        for (const Point& s : s_.points) centers.push_back(s - sed_t.center);
    }

    auto in_region = [&](const Point& v) {
        for (const Point& cc : centers)
            if (dist(v, cc) > radius + 1e-9) return false;
        return true;
    };

    // Deepest point: the region is nonempty iff the centers fit in a disc
    // of the same radius, and the center of their SED is an interior sample.
    Disc cover = smallest_enclosing_disc(centers);
    if (cover.radius > radius + 1e-9) return;
    offer_sed(c, cover.center);

    if (radius > 1e-12) {
        // Boundary arcs of the disc intersection, split at pairwise circle
        // crossings; arc endpoints and vippodrome-boundary crossings are the
        // candidates.
        for (std::size_t i = 0; i < centers.size(); ++i) {
            std::vector<double> cuts{0.0};
            bool alive = true;
            for (std::size_t j = 0; j < centers.size() && alive; ++j) {
                if (j == i) continue;
                double d = dist(centers[i], centers[j]);
                if (d <= 1e-12) continue;
                if (d > 2.0 * radius) { alive = false; break; }
                double beta = std::acos(std::clamp(-d / (2.0 * radius), -1.0, 1.0));
                double psi = angle_of(centers[i] - centers[j]);
                cuts.push_back(wrap_angle(psi + beta));
                cuts.push_back(wrap_angle(psi - beta));
            }
            if (!alive) continue;
            std::sort(cuts.begin(), cuts.end());
            cuts.push_back(cuts.front() + 2.0 * kPi);
            for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
                double alo = cuts[k], ahi = cuts[k + 1];
                if (ahi - alo < 1e-12) continue;
                Point mid = centers[i] + radius * dir_from_angle(0.5 * (alo + ahi));
                if (!in_region(mid)) continue;
                offer_sed(c, centers[i] + radius * dir_from_angle(alo));
                offer_sed(c, centers[i] + radius * dir_from_angle(ahi));
                for (const Vippodrome& vip : vips_) {
                    for (double ang : detail::circle_boundary_hit_angles(vip, centers[i], radius)) {
                        double rel = wrap_angle(ang - alo);
                        if (rel <= ahi - alo + 1e-9) offer_sed(c, centers[i] + radius * dir_from_angle(ang));
                    }
                }
            }
        }
    }

    // Valid-interval endpoints falling inside the region.
    for (std::size_t idx = 0; idx < vips_.size(); ++idx) {
        for (const auto& [lo, hi] : intervals(idx).intervals) {
            for (double s : {lo, hi}) {
                if (std::isinf(s)) continue;
                Point v = vips_[idx].boundary_point(s);
                if (in_region(v)) offer_sed(c, v);
            }
        }
    }

    c.case_i_hit = c.best.found;
}

inline void LabeledProblem::sed_case_ii(SedCandidates& c) const {
    struct Side {
        const std::vector<Point>* hosts;    // set whose FVD edges carry the center
        const std::vector<Point>* others;   // set constrained through f/g
        double vsign;                        // coefficient of v inside w
    };
    if (s_.size() < 2 && t_.size() < 2) return;

    for (const Side& side : {Side{&s_.points, &t_.points, +1.0}, Side{&t_.points, &s_.points, -1.0}}) {
        if (side.hosts->size() < 2) continue;
        Fvd fvd;
        try {
            fvd = farthest_voronoi(*side.hosts);
        } catch (const std::invalid_argument&) {
            continue;
        }
        for (const FvdEdge& edge : fvd.edges) {
            const Point& h1 = fvd.sites[edge.site_a];
            const Point& h2 = fvd.sites[edge.site_b];
            Point mid = (h1 + h2) * 0.5;
            double rho = 0.5 * dist(h1, h2);
            Vec2 ex = normalized(edge.b - edge.a);
            double xa = dot(edge.a - mid, ex), xb = dot(edge.b - mid, ex);

            // Canonical segments with 0 <= xi1 < xi2 (mirror the negative half).
            std::vector<std::pair<std::pair<double, double>, Vec2>> segs;
            if (xb > 1e-12) segs.push_back({{std::max(xa, 0.0), xb}, ex});
            if (xa < -1e-12) segs.push_back({{std::max(-xb, 0.0), -xa}, -ex});

            for (const auto& [xi_range, exdir] : segs) {
                detail::Frame frame{mid, exdir, perp(exdir)};
                double xi1 = xi_range.first, xi2 = xi_range.second;

                for (std::size_t idx = 0; idx < vips_.size(); ++idx) {
                    const ValidIntervalSet& set = intervals(idx);
                    if (set.empty()) continue;
                    sed_case_ii_boundary(c, idx, set, frame, rho, xi1, xi2, *side.others, side.vsign);
                }
            }
        }
    }
}

inline void LabeledProblem::sed_case_ii_boundary(SedCandidates& c, std::size_t idx,
                                                 const ValidIntervalSet& set, const detail::Frame& frame,
                                                 double rho, double xi1, double xi2,
                                                 const std::vector<Point>& others, double vsign) const {
    const Vippodrome& vip = vips_[idx];
    auto w_of = [&](const Point& q, const Point& v) {
        return Vec2{frame.x(q + v * vsign), frame.y(q + v * vsign)};
    };

    std::vector<double> cand;
    for (const auto& [lo, hi] : set.intervals) {
        if (!std::isinf(lo)) detail::push_sorted_unique(cand, lo);
        if (!std::isinf(hi)) detail::push_sorted_unique(cand, hi);
    }

    for (const detail::BoundaryPieceFn& piece : detail::boundary_pieces(vip)) {
        auto w_at = [&](const Point& q, double s) { return w_of(q, piece.at(s)); };
        auto wprime = [&](double s) {
            Vec2 tp = piece.tangent(s) * vsign;
            return Vec2{frame.dx(tp), frame.dy(tp)};
        };
        auto P_of = [&](const Vec2& w) { return w.x * w.x + w.y * w.y - rho * rho; };

        // (a) pole crossings wx = 0 per site
        for (const Point& q : others) {
            auto fn = [&](double s) { return w_at(q, s).x; };
            for (double s : detail::piece_roots(piece, fn))
                if (set.contains(s)) detail::push_sorted_unique(cand, s);
        }
        // (b) pairwise envelope breakpoints: P_q wx_q' - P_q' wx_q = 0
        for (std::size_t a = 0; a < others.size(); ++a) {
            for (std::size_t b = a + 1; b < others.size(); ++b) {
                auto fn = [&](double s) {
                    Vec2 wa = w_at(others[a], s), wb = w_at(others[b], s);
                    return P_of(wa) * wb.x - P_of(wb) * wa.x;
                };
                for (double s : detail::piece_roots(piece, fn))
                    if (set.contains(s)) detail::push_sorted_unique(cand, s);
            }
        }
        // (c) crossings with the edge clamps xi1/xi2: P - 2*xi*wx = 0
        for (const Point& q : others) {
            for (double xc : {xi1, xi2}) {
                auto fn = [&](double s) {
                    Vec2 w = w_at(q, s);
                    return P_of(w) - 2.0 * xc * w.x;
                };
                for (double s : detail::piece_roots(piece, fn))
                    if (set.contains(s)) detail::push_sorted_unique(cand, s);
            }
        }
        // (d) stationary points of individual bounds f_q: P' wx - P wx' = 0
        for (const Point& q : others) {
            auto fn = [&](double s) {
                Vec2 w = w_at(q, s);
                Vec2 wp = wprime(s);
                double Pp = 2.0 * (w.x * wp.x + w.y * wp.y);
                return Pp * w.x - P_of(w) * wp.x;
            };
            for (double s : detail::piece_roots(piece, fn))
                if (set.contains(s)) detail::push_sorted_unique(cand, s);
        }
    }

    for (double s : cand) {
        Vec2 v = vip.boundary_point(s);
        // Exact sandwich at this translation: the disc center parameter xi
        // must satisfy every site's containment bound.
        double z = xi1, u = xi2;
        bool feasible = true;
        for (const Point& q : others) {
            Vec2 w = w_of(q, v);
            double P = w.x * w.x + w.y * w.y - rho * rho;
            if (std::fabs(w.x) < 1e-12) {
                if (P > 1e-9) { feasible = false; break; }
            } else if (w.x > 0.0) {
                z = std::max(z, P / (2.0 * w.x));
            } else {
                u = std::min(u, P / (2.0 * w.x));
            }
        }
        if (!feasible || z > u + 1e-9) continue;
        offer_sed(c, v);
    }
}

inline void LabeledProblem::sed_case_iii(SedCandidates& c) const {
    double box = 10.0 * (smallest_enclosing_disc(s_.points).radius +
                         smallest_enclosing_disc(t_.points).radius + 10.0) +
                 norm(smallest_enclosing_disc(s_.points).center) +
                 norm(smallest_enclosing_disc(t_.points).center);

    for (const Point& s0 : s_.points) {
        for (const Point& t0 : t_.points) {
            Point p = s0 - t0;

            ConvexPolygon K = box_polygon(box);
            for (const Point& s : s_.points) {
                if (dist(s, s0) < 1e-12) continue;
                K = clip(K, Halfplane{s - s0, dot(s - t0, s - s0)});
                if (K.empty()) break;
            }
            if (!K.empty()) {
                for (const Point& t : t_.points) {
                    if (dist(t, t0) < 1e-12) continue;
                    K = clip(K, Halfplane{t - t0, dot(s0 - t, t - t0)});
                    if (K.empty()) break;
                }
            }
            if (K.empty()) continue;

            // Closest point of the (real) polygon boundary to p.
            bool have_real_edge = false;
            Point vmin;
            double dmin = inf();
            std::size_t nv = K.vertices.size();
            for (std::size_t i = 0; i < nv; ++i) {
                if (K.on_box[i] && K.on_box[(i + 1) % nv]) continue;  // box frame
                const Point& a = K.vertices[i];
                const Point& b = K.vertices[(i + 1) % nv];
                Vec2 ab = b - a;
                double len2 = norm2(ab);
                double tt = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
                Point q = a + ab * tt;
                double d = dist(q, p);
                have_real_edge = true;
                if (d < dmin) { dmin = d; vmin = q; }
            }
            if (!have_real_edge) {
                if (K.contains(p)) offer_sed(c, p);
                continue;
            }

            offer_sed(c, vmin);
            if (valid(vmin)) continue;

            for (std::size_t idx = 0; idx < vips_.size(); ++idx) {
                const ValidIntervalSet& set = intervals(idx);
                if (set.empty()) continue;
                // Crossings of the boundary with the real edges of K.
                std::vector<double> extra;
                for (std::size_t i = 0; i < nv; ++i) {
                    if (K.on_box[i] && K.on_box[(i + 1) % nv]) continue;
                    const Point& a = K.vertices[i];
                    const Point& b = K.vertices[(i + 1) % nv];
                    double len = dist(a, b);
                    if (len < 1e-12) continue;
                    Vec2 d = (b - a) / len;
                    try {
                        for (const LineHit& h : boundary_line_hits(vips_[idx], a, d))
                            if (h.t >= -1e-9 && h.t <= len + 1e-9) extra.push_back(h.bp.param);
                    } catch (const CollinearOverlap&) {
                    }
                }
                for (double s : candidate_params(idx, set, DistanceTo{p}, extra)) {
                    Point v = vips_[idx].boundary_point(s);
                    if (!K.contains(v, 1e-7)) continue;
                    offer_sed(c, v);
                }
            }
        }
    }
}

inline OptimizationResult LabeledProblem::minimize_sed() const {
    SedCandidates c;
    sed_case_i(c);
    if (!c.case_i_hit) {
        sed_case_ii(c);
        sed_case_iii(c);
        if (valid({0.0, 0.0})) offer_sed(c, {0.0, 0.0});
        for (std::size_t idx = 0; idx < vips_.size(); ++idx) {
            for (const auto& [lo, hi] : intervals(idx).intervals) {
                if (!std::isinf(lo)) offer_sed(c, vips_[idx].boundary_point(lo));
                if (!std::isinf(hi)) offer_sed(c, vips_[idx].boundary_point(hi));
            }
        }
    }
    if (!c.best.found) return infeasible(c.examined);
    return finish(c.best.v, c.best.value, c.examined);
}

}  // namespace sar
