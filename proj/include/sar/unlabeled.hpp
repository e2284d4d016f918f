#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sar/labeled.hpp"

namespace sar {

inline constexpr double kDefaultEpsAngle = 1e-6;

// Perpendicular-bisector directions (mod pi) of all tangent pairs; these are
// the only directions a generic direction must avoid.
inline std::vector<double> tangent_bisector_angles(const Configuration& c) {
    std::vector<double> out;
    for (const auto& [i, j] : close_pairs(c, 2.0 + eps())) {
        if (std::fabs(dist(c.points[i], c.points[j]) - 2.0) <= eps())
            out.push_back(angle_of(c.points[j] - c.points[i]) + kPi / 2.0);
    }
    return out;
}

inline bool is_generic_direction(const Configuration& s, const Configuration& t, const Vec2& delta,
                                 double eps_angle = kDefaultEpsAngle) {
    double a = angle_of(delta);
    for (const Configuration* c : {&s, &t})
        for (double b : tangent_bisector_angles(*c))
            if (line_angle_dist(a, b) <= eps_angle) return false;
    return true;
}

// Random direction at angular distance > eps_angle from every tangent-pair
// bisector of S and T. Succeeds with probability 1; capped retries.
inline Vec2 generic_direction(const Configuration& s, const Configuration& t, Rng& rng,
                              double eps_angle = kDefaultEpsAngle) {
    for (int tries = 0; tries < 1000; ++tries) {
        Vec2 d = dir_from_angle(rng.angle());
        if (is_generic_direction(s, t, d, eps_angle)) return d;
    }
    throw std::runtime_error("no generic direction found");
}

inline Vec2 generic_direction(const Configuration& s, const Configuration& t, std::uint64_t seed,
                              double eps_angle = kDefaultEpsAngle) {
    Rng rng(seed);
    return generic_direction(s, t, rng, eps_angle);
}

// Direction maximizing the angular clearance from all inner-tangent
// directions of nearby pairs (the close-pair superset of Delaunay
// neighbors): midpoint of the largest gap, guaranteeing a clearance of at
// least pi / (2 * #directions).
inline Vec2 good_direction(const Configuration& s, const Configuration& t) {
    std::vector<double> dirs;
    for (const Configuration* c : {&s, &t}) {
        for (const auto& [i, j] : close_pairs(*c, 2.0 * std::sqrt(2.0))) {
            double d = dist(c->points[i], c->points[j]);
            double base = angle_of(c->points[j] - c->points[i]);
            double half = std::asin(std::min(1.0, 2.0 / d));
            for (double a : {base + half, base - half}) {
                double m = std::fmod(a, kPi);
                if (m < 0.0) m += kPi;
                dirs.push_back(m);
            }
        }
    }
    if (dirs.empty()) return {1.0, 0.0};
    std::sort(dirs.begin(), dirs.end());
    double best_gap = kPi - dirs.back() + dirs.front();
    double best_mid = dirs.back() + 0.5 * best_gap;
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
        double gap = dirs[i + 1] - dirs[i];
        if (gap > best_gap) {
            best_gap = gap;
            best_mid = dirs[i] + 0.5 * gap;
        }
    }
    return dir_from_angle(best_mid);
}

// Direction-induced matching: both configurations ordered reverse
// lexicographically in the rotated frame (delta = +x, ties broken by the
// upper point first); equal ranks are matched. Pairs are stored in move
// order, so the induced itinerary is the identity permutation.
struct DirectionContext {
    Configuration s, t;
    Vec2 delta;
    std::vector<std::size_t> order_s;  // rank -> index into s.points
    std::vector<std::size_t> order_t;
    Matching matching;  // pairs[k] = (order_s[k], order_t[k])

    const Point& pair_start(std::size_t k) const { return s.points[matching.pairs[k].first]; }
    const Point& pair_target(std::size_t k) const { return t.points[matching.pairs[k].second]; }

    Itinerary plan_itinerary(const Vec2& v) const {
        Itinerary it;
        it.translation = v;
        it.order.resize(matching.size());
        for (std::size_t k = 0; k < it.order.size(); ++k) it.order[k] = k;
        return it;
    }
};

inline std::vector<std::size_t> reverse_lex_order(const std::vector<Point>& pts, const Vec2& delta) {
    Vec2 up = perp(delta);
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        double xa = dot(pts[a], delta), xb = dot(pts[b], delta);
        if (xa != xb) return xa > xb;
        double ya = dot(pts[a], up), yb = dot(pts[b], up);
        if (ya != yb) return ya > yb;
        return a < b;
    });
    return idx;
}

inline DirectionContext delta_matching(const Configuration& s, const Configuration& t, const Vec2& delta,
                                       double eps_angle = kDefaultEpsAngle) {
    if (s.size() != t.size()) throw std::invalid_argument("configuration sizes differ");
    if (!is_generic_direction(s, t, delta, eps_angle)) throw std::invalid_argument("non-generic direction");
    DirectionContext ctx;
    ctx.s = s;
    ctx.t = t;
    ctx.delta = normalized(delta);
    ctx.order_s = reverse_lex_order(s.points, ctx.delta);
    ctx.order_t = reverse_lex_order(t.points, ctx.delta);
    for (std::size_t k = 0; k < ctx.order_s.size(); ++k)
        ctx.matching.pairs.emplace_back(ctx.order_s[k], ctx.order_t[k]);
    return ctx;
}

// Enumerates the n(n-1) order-violating vippodromes: for ranks k > l, both
// kinds of the constraint "pair k before pair l". `arc_radius` selects the
// region variant: 2 for the boundary objects, 2 - eps for the strict
// blocking predicate (the two differ meaningfully near tangent pairs, where
// the wedge degenerates and the predicate's gradient vanishes).
template <typename Fn>
inline void for_each_bad_vippodrome(const DirectionContext& ctx, Fn&& fn,
                                    double arc_radius = Vippodrome::kArcRadius) {
    std::size_t n = ctx.matching.size();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < k; ++l) {
            for (int kind : {1, 2}) {
                fn(make_vippodrome(ctx.pair_start(k), ctx.pair_target(k), ctx.pair_start(l),
                                   ctx.pair_target(l), kind, k, l, arc_radius));
            }
        }
    }
}

struct BadVippodromeSet {
    std::vector<Vippodrome> vips;
};

inline BadVippodromeSet bad_vippodromes(const DirectionContext& ctx) {
    BadVippodromeSet set;
    std::size_t n = ctx.matching.size();
    set.vips.reserve(n * (n - 1));
    for_each_bad_vippodrome(ctx, [&](const Vippodrome& v) { set.vips.push_back(v); });
    return set;
}

// Alternating valid/invalid structure along the search ray or line through
// the origin: merged open blocked intervals; the complement is the (closed)
// valid set.
struct RayIntervalSet {
    Vec2 delta;
    std::vector<std::pair<double, double>> blocked;  // open, sorted, merged

    bool valid_at(double t) const {
        for (const auto& [lo, hi] : blocked) {
            if (t <= lo) return true;
            if (t < hi) return false;
        }
        return true;
    }

    // Smallest valid parameter >= t.
    double next_valid(double t) const {
        for (const auto& [lo, hi] : blocked) {
            if (t <= lo) return t;
            if (t < hi) t = hi;
        }
        return t;
    }

    // Largest valid parameter <= t, or nullopt if everything below is blocked.
    std::optional<double> prev_valid(double t) const {
        for (auto it = blocked.rbegin(); it != blocked.rend(); ++it) {
            if (t >= it->second) return t;
            if (t > it->first) t = it->first;
            if (std::isinf(t) && t < 0.0) return std::nullopt;
        }
        return t;
    }

    // Valid (closed) intervals within [from, to].
    std::vector<std::pair<double, double>> valid_intervals(double from, double to) const {
        std::vector<std::pair<double, double>> out;
        double cur = from;
        for (const auto& [lo, hi] : blocked) {
            if (hi <= cur) continue;
            if (lo > to) break;
            if (lo >= cur) out.emplace_back(cur, std::min(lo, to));
            cur = std::max(cur, hi);
            if (cur > to) break;
        }
        if (cur <= to) out.emplace_back(cur, to);
        return out;
    }
};

inline RayIntervalSet build_ray_intervals(const DirectionContext& ctx, bool full_line) {
    RayIntervalSet set;
    set.delta = ctx.delta;
    std::vector<std::pair<double, double>> raw;
    // Strict-radius regions: their geometry matches the blocking predicate
    // exactly, including along the degenerate rays of tangent pairs.
    const double strict_radius = Vippodrome::kArcRadius - eps();
    for_each_bad_vippodrome(
        ctx,
        [&](const Vippodrome& vip) {
            auto iv = vip_line_interval(vip, {0.0, 0.0}, ctx.delta);
            if (!iv) return;
            auto [lo, hi] = *iv;
            if (hi - lo < 1e-12) return;
            if (!full_line) {
                if (hi <= 0.0) return;
                lo = std::max(lo, -1.0);
            }
            raw.emplace_back(lo, hi);
        },
        strict_radius);
    std::sort(raw.begin(), raw.end());
    for (const auto& [lo, hi] : raw) {
        if (!set.blocked.empty() && lo < set.blocked.back().second - 1e-12) {
            set.blocked.back().second = std::max(set.blocked.back().second, hi);
        } else {
            set.blocked.emplace_back(lo, hi);
        }
    }
    return set;
}

// A translation in direction delta strictly beyond the rightmost boundary
// crossing of any bad vippodrome; its induced itinerary is always valid.
inline Vec2 feasibility_translation(const DirectionContext& ctx) {
    double t_max = 0.0;
    bool violated = false;
    for_each_bad_vippodrome(ctx, [&](const Vippodrome& vip) {
        auto iv = vip_line_interval(vip, {0.0, 0.0}, ctx.delta);
        if (!iv) return;
        if (std::isinf(iv->second)) violated = true;
        t_max = std::max(t_max, iv->second);
    });  // radius-2 regions: a conservative superset of the strict ones
    if (violated) throw std::logic_error("bad vippodrome contains the search ray");
    Vec2 v = ctx.delta * (t_max + 1.0);
    for_each_bad_vippodrome(ctx, [&](const Vippodrome& vip) {
        if (vip.contains_interior(v)) violated = true;
    });
    if (violated) throw std::logic_error("feasibility translation lies inside a bad vippodrome");
    return v;
}

namespace detail {

// Finalizes a ray/line result at parameter t. Candidates sit exactly on
// strict-region boundaries, where the blocking predicate is at its
// threshold; floating noise can push a constraint marginally past it, so on
// a validation failure the parameter is nudged within the valid set.
inline OptimizationResult finish_ray(const DirectionContext& ctx, const RayIntervalSet& set, double t,
                                     const std::function<double(double)>& value_at) {
    auto attempt = [&](double tt) -> std::optional<OptimizationResult> {
        if (!set.valid_at(tt)) return std::nullopt;
        OptimizationResult res;
        res.v = ctx.delta * tt;
        res.value = value_at(tt);
        res.itinerary = ctx.plan_itinerary(res.v);
        res.status = SolveStatus::Optimal;
        if (!validate_itinerary(ctx.s, ctx.t, ctx.matching, res.v, res.itinerary)) return std::nullopt;
        return res;
    };
    if (auto res = attempt(t)) return *res;
    for (double magnitude : {1e-9, 1e-8, 1e-7, 1e-6, 1e-5}) {
        for (double sign : {+1.0, -1.0}) {
            if (auto res = attempt(t + sign * magnitude * (1.0 + std::fabs(t)))) return *res;
        }
    }
    // Isolated touching point of two blocked intervals: valid only at the
    // exact tangency, which floating noise can deny. Advance interval by
    // interval until a robust point is found.
    double cursor = t;
    for (int hop = 0; hop < 64; ++hop) {
        cursor = set.next_valid(cursor + 1e-5 * (1.0 + std::fabs(cursor)));
        if (auto res = attempt(cursor)) return *res;
        if (auto res = attempt(cursor + 1e-7 * (1.0 + std::fabs(cursor)))) return *res;
    }
    throw std::logic_error("ray optimizer produced an invalid itinerary");
}

}  // namespace detail

// Leftmost point of the leftmost valid interval along the delta-ray.
inline OptimizationResult shortest_valid_on_ray(const DirectionContext& ctx) {
    RayIntervalSet set = build_ray_intervals(ctx, false);
    double t = set.next_valid(0.0);
    return detail::finish_ray(ctx, set, t, [](double tt) { return tt; });
}

// Minimum of the bounding-rectangle area over the valid ray intervals; the
// restriction of the area to the ray is piecewise quadratic between the
// breakpoint-line crossings.
inline OptimizationResult min_aabr_on_ray(const DirectionContext& ctx) {
    RayIntervalSet set = build_ray_intervals(ctx, false);
    Rect rs = aabr_of_discs(ctx.s.points);
    Rect rt = aabr_of_discs(ctx.t.points);

    std::vector<double> breaks;
    auto add_break = [&](double coord_s, double coord_t, double dcomp) {
        if (std::fabs(dcomp) > 1e-12) breaks.push_back((coord_s - coord_t) / dcomp);
    };
    add_break(rs.xlo, rt.xlo, ctx.delta.x);
    add_break(rs.xhi, rt.xhi, ctx.delta.x);
    add_break(rs.ylo, rt.ylo, ctx.delta.y);
    add_break(rs.yhi, rt.yhi, ctx.delta.y);

    double reach = 1.0;
    for (double b : breaks) reach = std::max(reach, std::fabs(b) + 1.0);
    for (const auto& [lo, hi] : set.blocked) {
        if (!std::isinf(hi)) reach = std::max(reach, hi + 1.0);
        if (!std::isinf(lo)) reach = std::max(reach, std::fabs(lo) + 1.0);
    }

    auto phi = [&](double t) { return aabr_area_at(rs, rt, ctx.delta * t); };

    bool found = false;
    double best_t = 0.0, best_val = inf();
    auto offer = [&](double t) {
        double val = phi(t);
        if (!found || val < best_val - 1e-12 || (std::fabs(val - best_val) <= 1e-12 && t < best_t)) {
            found = true;
            best_t = t;
            best_val = val;
        }
    };

    for (const auto& [lo, hi] : set.valid_intervals(0.0, reach)) {
        std::vector<double> ts{lo, hi};
        for (double b : breaks)
            if (b > lo && b < hi) ts.push_back(b);
        std::sort(ts.begin(), ts.end());
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            double a = ts[i], b = ts[i + 1];
            offer(a);
            offer(b);
            if (b - a < 1e-12) continue;
            // Vertex of the interpolating parabola (phi is exactly quadratic
            // on the elementary piece).
            double f0 = phi(a), fm = phi(0.5 * (a + b)), f1 = phi(b);
            double denom = f0 - 2.0 * fm + f1;
            if (std::fabs(denom) > 1e-14) {
                double vertex = 0.5 * (a + b) + (f0 - f1) * (b - a) / (4.0 * denom);
                if (vertex > a && vertex < b) offer(vertex);
            }
        }
    }
    if (!found) best_t = set.next_valid(0.0);
    return detail::finish_ray(ctx, set, best_t, phi);
}

// --- smallest enclosing disc along the full line --------------------------

namespace detail {

struct LineSedSearch {
    const DirectionContext& ctx;
    const RayIntervalSet& set;
    bool found = false;
    double best_t = 0.0;
    double best_value = inf();

    double radius_at(double t) const {
        std::vector<Point> pts = ctx.s.points;
        Vec2 v = ctx.delta * t;
        for (const Point& p : ctx.t.points) pts.push_back(p + v);
        return smallest_enclosing_disc(pts).radius;
    }

    void offer(double t) {
        if (!set.valid_at(t)) return;
        double val = radius_at(t);
        if (!found || val < best_value - 1e-12 || (std::fabs(val - best_value) <= 1e-12 && t < best_t)) {
            found = true;
            best_t = t;
            best_value = val;
        }
    }
};

// Exact quadratic roots of fn(t) (fn must be a true quadratic polynomial).
inline std::vector<double> quadratic_roots_of(const std::function<double(double)>& fn) {
    double f0 = fn(0.0), f1 = fn(1.0), fm = fn(-1.0);
    double a = 0.5 * (f1 + fm) - f0;
    double b = 0.5 * (f1 - fm);
    return solve_quadratic(a, b, f0);
}

}  // namespace detail

inline OptimizationResult min_sed_on_line(const DirectionContext& ctx) {
    RayIntervalSet set = build_ray_intervals(ctx, true);
    detail::LineSedSearch search{ctx, set, {}};
    std::size_t n = ctx.matching.size();

    auto finish = [&]() {
        return detail::finish_ray(ctx, set, search.best_t, [&](double tt) { return search.radius_at(tt); });
    };

    if (n == 1) {
        Point p = ctx.pair_start(0) - ctx.pair_target(0);
        search.offer(dot(p, ctx.delta));
        search.offer(0.0);
        return finish();
    }

    Disc sed_s = smallest_enclosing_disc(ctx.s.points);
    Disc sed_t = smallest_enclosing_disc(ctx.t.points);

    // Case (i): a valid line point placing the smaller set inside the larger
    // SED is globally optimal.
    {
        bool s_larger = sed_s.radius >= sed_t.radius;
        double radius = s_larger ? sed_s.radius : sed_t.radius;
        double tlo = -inf(), thi = inf();
        bool empty = false;
        auto clip_by_disc = [&](const Point& cc) {
            auto roots = detail::line_vs_circle({0.0, 0.0}, ctx.delta, cc, radius);
            if (roots.empty()) {
                empty = true;
                return;
            }
            tlo = std::max(tlo, roots.front());
            thi = std::min(thi, roots.back());
        };
        if (s_larger) {
            for (const Point& t : ctx.t.points) clip_by_disc(sed_s.center - t);
        } else {
            for (const Point& s : ctx.s.points) clip_by_disc(s - sed_t.center);
        }
        if (!empty && tlo <= thi) {
            double t0 = std::clamp(0.0, tlo, thi);
            double cand = set.valid_at(t0) ? t0 : set.next_valid(tlo);
            if (cand <= thi) search.offer(cand);
            if (auto pv = set.prev_valid(thi); !search.found && pv && *pv >= tlo) search.offer(*pv);
            if (search.found) return finish();
        }
    }

    // Case (ii): disc through two same-set points (an FVD edge) and one
    // point of the other set; the center parameter is sandwiched between
    // per-point quadratic-over-linear bounds of the line parameter.
    for (int side = 0; side < 2; ++side) {
        const std::vector<Point>& hosts = side == 0 ? ctx.s.points : ctx.t.points;
        const std::vector<Point>& others = side == 0 ? ctx.t.points : ctx.s.points;
        double vsign = side == 0 ? +1.0 : -1.0;
        if (hosts.size() < 2) continue;
        Fvd fvd;
        try {
            fvd = farthest_voronoi(hosts);
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

            std::vector<std::pair<std::pair<double, double>, Vec2>> segs;
            if (xb > 1e-12) segs.push_back({{std::max(xa, 0.0), xb}, ex});
            if (xa < -1e-12) segs.push_back({{std::max(-xb, 0.0), -xa}, -ex});

            for (const auto& [xi_range, exdir] : segs) {
                detail::Frame frame{mid, exdir, perp(exdir)};
                double xi1 = xi_range.first, xi2 = xi_range.second;

                auto w_at = [&](const Point& q, double t) {
                    Point pos = q + ctx.delta * (vsign * t);
                    return Vec2{frame.x(pos), frame.y(pos)};
                };
                auto P_of = [&](const Vec2& w) { return w.x * w.x + w.y * w.y - rho * rho; };

                std::vector<double> cand;
                for (std::size_t a = 0; a < others.size(); ++a) {
                    const Point& qa = others[a];
                    // pole
                    {
                        double x0 = w_at(qa, 0.0).x, x1 = w_at(qa, 1.0).x;
                        double slope = x1 - x0;
                        if (std::fabs(slope) > 1e-12) detail::push_sorted_unique(cand, -x0 / slope);
                    }
                    // clamps
                    for (double xc : {xi1, xi2}) {
                        auto fn = [&](double t) {
                            Vec2 w = w_at(qa, t);
                            return P_of(w) - 2.0 * xc * w.x;
                        };
                        for (double r : detail::quadratic_roots_of(fn)) detail::push_sorted_unique(cand, r);
                    }
                    // stationary points of the bound
                    {
                        auto fn = [&](double t) {
                            Vec2 w = w_at(qa, t);
                            Vec2 wp = w_at(qa, t + 0.5) - w_at(qa, t - 0.5);  // exact: affine in t
                            double Pp = 2.0 * (w.x * wp.x + w.y * wp.y);
                            return Pp * w.x - P_of(w) * wp.x;
                        };
                        for (double r : detail::quadratic_roots_of(fn)) detail::push_sorted_unique(cand, r);
                    }
                    // pairwise envelope breakpoints (cocircularity; quadratic)
                    for (std::size_t b = a + 1; b < others.size(); ++b) {
                        auto fn = [&](double t) {
                            Vec2 wa = w_at(qa, t), wb = w_at(others[b], t);
                            return P_of(wa) * wb.x - P_of(wb) * wa.x;
                        };
                        for (double r : detail::quadratic_roots_of(fn)) detail::push_sorted_unique(cand, r);
                    }
                }
                for (const auto& [blo, bhi] : set.blocked) {
                    if (!std::isinf(blo)) detail::push_sorted_unique(cand, blo);
                    if (!std::isinf(bhi)) detail::push_sorted_unique(cand, bhi);
                }

                for (double t : cand) {
                    if (!set.valid_at(t)) continue;
                    double z = xi1, u = xi2;
                    bool feasible = true;
                    for (const Point& q : others) {
                        Vec2 w = w_at(q, t);
                        double P = P_of(w);
                        if (std::fabs(w.x) < 1e-12) {
                            if (P > 1e-9) { feasible = false; break; }
                        } else if (w.x > 0.0) {
                            z = std::max(z, P / (2.0 * w.x));
                        } else {
                            u = std::min(u, P / (2.0 * w.x));
                        }
                    }
                    if (feasible && z <= u + 1e-9) search.offer(t);
                }
            }
        }
    }

    // Case (iii): diametral pair (s0, t0 + v); the admissible line interval
    // comes from clipping the doubled FVD cells.
    {
        Fvd fvd_s = farthest_voronoi(ctx.s.points);
        Fvd fvd_t = farthest_voronoi(ctx.t.points);
        for (std::size_t i = 0; i < ctx.s.points.size(); ++i) {
            auto cell_s = fvd_s.cells.find(i);
            if (cell_s == fvd_s.cells.end()) continue;
            ConvexPolygon big_s = cell_s->second.region.scaled(2.0);
            for (std::size_t j = 0; j < ctx.t.points.size(); ++j) {
                auto cell_t = fvd_t.cells.find(j);
                if (cell_t == fvd_t.cells.end()) continue;
                const Point& s0 = ctx.s.points[i];
                const Point& t0 = ctx.t.points[j];
                Point anchor = s0 + t0;

                auto iv_i = big_s.line_clip(anchor, ctx.delta);
                if (!iv_i) continue;
                auto iv_j = cell_t->second.region.scaled(2.0).line_clip(anchor, -ctx.delta);
                if (!iv_j) continue;
                double klo = std::max(iv_i->first, iv_j->first);
                double khi = std::min(iv_i->second, iv_j->second);
                if (klo > khi) continue;

                double target = dot(s0 - t0, ctx.delta);
                double tc = std::clamp(target, klo, khi);
                if (set.valid_at(tc)) {
                    search.offer(tc);
                    continue;
                }
                if (auto pv = set.prev_valid(std::min(target, khi)); pv && *pv >= klo - 1e-12)
                    search.offer(std::max(*pv, klo));
                double nv = set.next_valid(std::max(target, klo));
                if (nv <= khi + 1e-12) search.offer(std::min(nv, khi));
            }
        }
    }

    if (!search.found) {
        // The positive ray always contains valid points for a generic
        // direction.
        search.offer(set.next_valid(0.0));
    }
    return finish();
}

// Valid translation with the theoretical length guarantee
// (r(S)+r(T)+2)(1+8n) along the clearance-maximizing direction.
// Preconditions: S and T aligned at their shared SED centers.
inline Vec2 bound_translation(const Configuration& s, const Configuration& t,
                              DirectionContext* ctx_out = nullptr) {
    Vec2 dir = good_direction(s, t);
    double r_sum = smallest_enclosing_disc(s.points).radius + smallest_enclosing_disc(t.points).radius;
    double n = static_cast<double>(s.size());
    Vec2 v = dir * ((r_sum + 2.0) * (1.0 + 8.0 * n));
    DirectionContext ctx = delta_matching(s, t, dir);
    bool inside = false;
    for_each_bad_vippodrome(ctx, [&](const Vippodrome& vip) {
        if (vip.contains_interior(v)) inside = true;
    });
    if (inside) throw std::logic_error("bound translation lies inside a bad vippodrome");
    if (ctx_out) *ctx_out = std::move(ctx);
    return v;
}

enum class Criterion { Shortest, Aabr, Sed };

struct MultiDirectionResult {
    OptimizationResult best;
    std::size_t best_index = 0;
    std::vector<Vec2> directions;
    std::vector<double> per_direction;
};

// Best result of the chosen ray/line-restricted optimizer over k seeded
// generic directions. Deterministic for a given (seed, k): directions are
// drawn sequentially, so results for smaller k are prefixes.
inline MultiDirectionResult multi_direction_optimize(const Configuration& s, const Configuration& t,
                                                     std::size_t k, Criterion criterion,
                                                     std::uint64_t seed) {
    if (k == 0) throw std::invalid_argument("need at least one direction");
    MultiDirectionResult out;
    Rng rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        Vec2 delta = generic_direction(s, t, rng);
        DirectionContext ctx = delta_matching(s, t, delta);
        OptimizationResult res;
        switch (criterion) {
            case Criterion::Shortest: res = shortest_valid_on_ray(ctx); break;
            case Criterion::Aabr: res = min_aabr_on_ray(ctx); break;
            case Criterion::Sed: res = min_sed_on_line(ctx); break;
        }
        out.directions.push_back(delta);
        out.per_direction.push_back(res.value);
        if (i == 0 || res.value < out.best.value) {
            out.best = res;
            out.best_index = i;
        }
    }
    return out;
}

}  // namespace sar
