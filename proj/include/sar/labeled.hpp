#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sar/blocking.hpp"
#include "sar/enclosing.hpp"
#include "sar/fvd.hpp"
#include "sar/vippodrome.hpp"

namespace sar {

// Sorted, disjoint, closed parameter intervals of one vippodrome boundary
// lying in the valid region Q. Endpoints are boundary intersection
// parameters or +-infinity.
struct ValidIntervalSet {
    std::size_t boundary_id = 0;
    std::vector<std::pair<double, double>> intervals;

    bool empty() const { return intervals.empty(); }

    bool contains(double s, double slack = 1e-9) const {
        for (const auto& [lo, hi] : intervals) {
            if (s < lo - slack) return false;
            if (s <= hi + slack) return true;
        }
        return false;
    }

    // Nearest valid parameter >= s (s itself when valid).
    std::optional<double> next_at_or_after(double s) const {
        for (const auto& [lo, hi] : intervals) {
            if (s <= hi) return std::max(s, lo);
        }
        return std::nullopt;
    }

    // Nearest valid parameter <= s.
    std::optional<double> prev_at_or_before(double s) const {
        std::optional<double> best;
        for (const auto& [lo, hi] : intervals) {
            if (lo > s) break;
            best = std::min(s, hi);
        }
        return best;
    }
};

enum class SolveStatus { Optimal, Infeasible };

struct OptimizationResult {
    Vec2 v;
    double value = 0.0;
    Itinerary itinerary;
    SolveStatus status = SolveStatus::Infeasible;
    std::size_t candidates_examined = 0;
};

namespace detail {

struct Frame;  // defined with the SED machinery

inline bool lex_less(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// Tracks the best candidate under (value, lex v) with a small value slack so
// ties broken lexicographically are deterministic.
struct BestTracker {
    bool found = false;
    Vec2 v;
    double value = inf();

    bool offer(const Vec2& cand, double val) {
        if (!found || val < value - 1e-12 ||
            (std::fabs(val - value) <= 1e-12 && lex_less(cand, v))) {
            found = true;
            v = cand;
            value = val;
            return true;
        }
        return false;
    }
};

}  // namespace detail

// Labeled instance solver: owns the vippodromes and the per-boundary valid
// interval representation of Q, and runs the three exact optimizers.
//
// `fixed_order` switches validity from TBG acyclicity to a prescribed move
// order (only the order-violating vippodromes are constructed, and a
// translation is valid iff it avoids all of them). This is the restricted
// notion used by the unlabeled heuristics' 2-D mode.
class LabeledProblem {
public:
    LabeledProblem(Configuration s, Configuration t, Matching m,
                   std::optional<std::vector<std::size_t>> fixed_order = std::nullopt)
        : s_(std::move(s)), t_(std::move(t)), m_(std::move(m)), fixed_order_(std::move(fixed_order)) {
        std::size_t n = m_.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (fixed_order_) {
                    // Keep only constraints contradicting the fixed order:
                    // "i before j" is bad when i is scheduled after j.
                    if ((*fixed_order_)[i] < (*fixed_order_)[j]) continue;
                }
                for (int kind : {1, 2}) {
                    vips_.push_back(make_vippodrome(start_of(i), target_of(i), start_of(j), target_of(j),
                                                    kind, i, j));
                }
            }
        }
        interval_cache_.resize(vips_.size());
    }

    const Configuration& start() const { return s_; }
    const Configuration& target() const { return t_; }
    const Matching& matching() const { return m_; }
    const std::vector<Vippodrome>& vippodromes() const { return vips_; }

    bool valid(const Vec2& v) const {
        if (fixed_order_) {
            for (const Vippodrome& vip : vips_)
                if (vip.contains_interior(v)) return false;
            return true;
        }
        return is_acyclic(build_tbg(s_, t_, m_, v));
    }

    std::optional<Itinerary> itinerary_at(const Vec2& v) const {
        if (fixed_order_) {
            Itinerary it;
            it.translation = v;
            it.order.resize(m_.size());
            std::vector<std::pair<std::size_t, std::size_t>> ranked;
            for (std::size_t i = 0; i < m_.size(); ++i) ranked.emplace_back((*fixed_order_)[i], i);
            std::sort(ranked.begin(), ranked.end());
            for (std::size_t k = 0; k < ranked.size(); ++k) it.order[k] = ranked[k].second;
            if (!validate_itinerary(s_, t_, m_, v, it)) return std::nullopt;
            return it;
        }
        auto res = topo_itinerary(build_tbg(s_, t_, m_, v), v);
        if (auto* it = std::get_if<Itinerary>(&res)) return *it;
        return std::nullopt;
    }

    // Valid sub-intervals of boundary `idx`: the boundary is split at every
    // intersection with every other boundary, each elementary sub-arc is
    // classified at its midpoint, and same-class neighbors are merged.
    const ValidIntervalSet& intervals(std::size_t idx) const {
        if (interval_cache_[idx]) return *interval_cache_[idx];

        const Vippodrome& vip = vips_[idx];
        std::vector<double> splits;
        for (std::size_t other = 0; other < vips_.size(); ++other) {
            if (other == idx) continue;
            try {
                for (const PairHit& hit : boundary_pair_hits(vip, vips_[other]))
                    splits.push_back(hit.param_a);
            } catch (const CollinearOverlap&) {
                // Degenerate collinear rays of unrelated vippodromes; the
                // neighboring split points still delimit the affected runs.
            }
        }
        double ah = vip.arc_half_len();
        splits.push_back(-ah);
        splits.push_back(ah);
        std::sort(splits.begin(), splits.end());
        splits.erase(std::unique(splits.begin(), splits.end(),
                                 [](double a, double b) { return std::fabs(a - b) <= 1e-10; }),
                     splits.end());

        ValidIntervalSet set;
        set.boundary_id = idx;
        auto classify = [&](double s) { return valid(vip.boundary_point(s)); };

        std::vector<std::pair<double, double>> pieces;
        pieces.emplace_back(-inf(), splits.front());
        for (std::size_t i = 0; i + 1 < splits.size(); ++i) pieces.emplace_back(splits[i], splits[i + 1]);
        pieces.emplace_back(splits.back(), inf());

        for (const auto& [lo, hi] : pieces) {
            double probe = std::isinf(lo) ? hi - 10.0 : (std::isinf(hi) ? lo + 10.0 : 0.5 * (lo + hi));
            if (!std::isinf(lo) && !std::isinf(hi) && hi - lo < 1e-12) continue;
            if (!classify(probe)) continue;
            if (!set.intervals.empty() && set.intervals.back().second >= lo - 1e-9)
                set.intervals.back().second = hi;
            else
                set.intervals.emplace_back(lo, hi);
        }
        interval_cache_[idx] = std::move(set);
        return *interval_cache_[idx];
    }

    OptimizationResult minimize_translation() const {
        std::size_t examined = 0;
        if (valid({0.0, 0.0})) return finish({0.0, 0.0}, 0.0, 1);

        detail::BestTracker best;
        for (std::size_t idx = 0; idx < vips_.size(); ++idx) {
            const ValidIntervalSet& set = intervals(idx);
            if (set.empty()) continue;
            std::vector<double> params = candidate_params(idx, set, DistanceTo{{0.0, 0.0}}, {});
            for (double s : params) {
                Vec2 v = vips_[idx].boundary_point(s);
                ++examined;
                if (!valid(v)) continue;
                best.offer(v, norm(v));
            }
        }
        if (!best.found) return infeasible(examined);
        return finish(best.v, best.value, examined);
    }

    OptimizationResult minimize_aabr() const {
        Rect rs = aabr_of_discs(s_.points);
        Rect rt = aabr_of_discs(t_.points);
        double xb1 = rs.xlo - rt.xlo, xb2 = rs.xhi - rt.xhi;
        double yb1 = rs.ylo - rt.ylo, yb2 = rs.yhi - rt.yhi;
        double xlo = std::min(xb1, xb2), xhi = std::max(xb1, xb2);
        double ylo = std::min(yb1, yb2), yhi = std::max(yb1, yb2);

        std::size_t examined = 0;
        // The area is constant (and globally minimal) over the center region;
        // probe its center and corners.
        for (const Vec2& v : {Vec2{0.5 * (xlo + xhi), 0.5 * (ylo + yhi)},
                              Vec2{xlo, ylo}, Vec2{xlo, yhi}, Vec2{xhi, ylo}, Vec2{xhi, yhi}}) {
            ++examined;
            if (valid(v)) return finish(v, aabr_area_at(rs, rt, v), examined);
        }

        detail::BestTracker best;
        for (std::size_t idx = 0; idx < vips_.size(); ++idx) {
            const ValidIntervalSet& set = intervals(idx);
            if (set.empty()) continue;
            // Extra splits where the boundary crosses the four breakpoint lines.
            std::vector<double> extra;
            auto add_hits = [&](const Point& o, const Vec2& d) {
                for (const LineHit& h : boundary_line_hits(vips_[idx], o, d)) extra.push_back(h.bp.param);
            };
            for (double xb : {xb1, xb2}) add_hits({xb, 0.0}, {0.0, 1.0});
            for (double yb : {yb1, yb2}) add_hits({0.0, yb}, {1.0, 0.0});

            std::vector<double> params = candidate_params(idx, set, AabrArea{rs, rt}, extra);
            for (double s : params) {
                Vec2 v = vips_[idx].boundary_point(s);
                ++examined;
                if (!valid(v)) continue;
                best.offer(v, aabr_area_at(rs, rt, v));
            }
        }
        if (!best.found) return infeasible(examined);
        return finish(best.v, best.value, examined);
    }

    OptimizationResult minimize_sed() const;

private:
    const Point& start_of(std::size_t pair) const { return s_.points[m_.pairs[pair].first]; }
    const Point& target_of(std::size_t pair) const { return t_.points[m_.pairs[pair].second]; }

    OptimizationResult finish(const Vec2& v, double value, std::size_t examined) const {
        OptimizationResult res;
        res.candidates_examined = examined;
        auto it = itinerary_at(v);
        if (!it) return res;  // should not happen for valid v; report infeasible
        res.v = v;
        res.value = value;
        res.itinerary = *it;
        res.status = SolveStatus::Optimal;
        return res;
    }

    OptimizationResult infeasible(std::size_t examined) const {
        OptimizationResult res;
        res.candidates_examined = examined;
        res.status = SolveStatus::Infeasible;
        return res;
    }

    // Candidate parameters on boundary `idx`: finite endpoints of the valid
    // intervals, objective extrema falling inside them, and any extra split
    // parameters (breakpoint-line or polygon crossings) inside them.
    std::vector<double> candidate_params(std::size_t idx, const ValidIntervalSet& set,
                                         const BoundaryObjective& obj,
                                         const std::vector<double>& extra) const {
        std::vector<double> out;
        for (const auto& [lo, hi] : set.intervals) {
            if (!std::isinf(lo)) out.push_back(lo);
            if (!std::isinf(hi)) out.push_back(hi);
        }
        for (const BoundaryPoint& bp : boundary_extrema(vips_[idx], obj))
            if (set.contains(bp.param)) out.push_back(bp.param);
        for (double s : extra)
            if (set.contains(s)) out.push_back(s);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end(),
                              [](double a, double b) { return std::fabs(a - b) <= 1e-12; }),
                  out.end());
        return out;
    }

    // --- minimize_sed helpers -------------------------------------------

    double sed_radius_at(const Vec2& v) const {
        std::vector<Point> pts = s_.points;
        for (const Point& p : t_.points) pts.push_back(p + v);
        return smallest_enclosing_disc(pts).radius;
    }

    struct SedCandidates {
        detail::BestTracker best;
        std::size_t examined = 0;
        bool case_i_hit = false;
    };

    void offer_sed(SedCandidates& c, const Vec2& v) const {
        ++c.examined;
        if (!valid(v)) return;
        c.best.offer(v, sed_radius_at(v));
    }

    void sed_case_i(SedCandidates& c) const;
    void sed_case_ii(SedCandidates& c) const;
    void sed_case_ii_boundary(SedCandidates& c, std::size_t idx, const ValidIntervalSet& set,
                              const detail::Frame& frame, double rho, double xi1, double xi2,
                              const std::vector<Point>& others, double vsign) const;
    void sed_case_iii(SedCandidates& c) const;

    Configuration s_;
    Configuration t_;
    Matching m_;
    std::optional<std::vector<std::size_t>> fixed_order_;
    std::vector<Vippodrome> vips_;
    mutable std::vector<std::optional<ValidIntervalSet>> interval_cache_;
};

// ---------------------------------------------------------------------------
// Spec-surface free functions
// ---------------------------------------------------------------------------

inline bool is_valid_translation(const Configuration& s, const Configuration& t, const Matching& m,
                                 const Vec2& v) {
    return is_acyclic(build_tbg(s, t, m, v));
}

inline OptimizationResult minimize_translation(const Configuration& s, const Configuration& t,
                                               const Matching& m) {
    return LabeledProblem(s, t, m).minimize_translation();
}

inline OptimizationResult minimize_aabr(const Configuration& s, const Configuration& t, const Matching& m) {
    return LabeledProblem(s, t, m).minimize_aabr();
}

inline OptimizationResult minimize_sed(const Configuration& s, const Configuration& t, const Matching& m) {
    return LabeledProblem(s, t, m).minimize_sed();
}

}  // namespace sar

#include "sar/labeled_sed.hpp"
