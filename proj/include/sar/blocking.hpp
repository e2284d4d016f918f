#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "sar/geometry.hpp"

namespace sar {

// Bijection between start and target positions: pairs[i] = (index into S,
// index into T). With labels, endpoints of a pair share a label.
struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    std::size_t size() const { return pairs.size(); }

    static Matching identity(std::size_t n) {
        Matching m;
        m.pairs.reserve(n);
        for (std::size_t i = 0; i < n; ++i) m.pairs.emplace_back(i, i);
        return m;
    }
};

// Translation blocking graph: vertex per matched pair; edge (a, b) means
// pair a has to perform its motion before pair b.
struct Tbg {
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> successors;  // adjacency by vertex

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (const auto& adj : successors) m += adj.size();
        return m;
    }
};

// Move order over the matched pairs, together with the translation it is
// valid for. Entries index into Matching.pairs.
struct Itinerary {
    std::vector<std::size_t> order;
    Vec2 translation;
};

// Blocking conditions for vertex pair (a, b) at translation v:
//   (1) the disc at a's start meets the region swept by b's move, or
//   (2) the disc at b's translated target meets the region swept by a's move.
// Either forces a to move before b.
inline bool blocks_before(const Point& a_start, const Point& a_target,
                          const Point& b_start, const Point& b_target,
                          const Vec2& v) {
    return disc_blocks_segment(a_start, Segment{b_start, b_target + v}) ||
           disc_blocks_segment(b_target + v, Segment{a_start, a_target + v});
}

inline Tbg build_tbg(const Configuration& s, const Configuration& t,
                     const Matching& m, const Vec2& v) {
    Tbg g;
    g.order = m.size();
    g.successors.assign(g.order, {});
    for (std::size_t i = 0; i < g.order; ++i) {
        const Point& si = s.points[m.pairs[i].first];
        const Point& ti = t.points[m.pairs[i].second];
        for (std::size_t j = 0; j < g.order; ++j) {
            if (i == j) continue;
            const Point& sj = s.points[m.pairs[j].first];
            const Point& tj = t.points[m.pairs[j].second];
            if (blocks_before(si, ti, sj, tj, v)) g.successors[i].push_back(j);
        }
    }
    return g;
}

struct CycleWitness {
    std::vector<std::size_t> cycle;  // v0, v1, ..., v0
};

// Topological order of the TBG with a deterministic tie-break (smallest
// vertex index among the ready ones), or a witness cycle if none exists.
inline std::variant<Itinerary, CycleWitness> topo_itinerary(const Tbg& g, const Vec2& v = {}) {
    std::size_t n = g.order;
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& adj : g.successors)
        for (std::size_t to : adj) ++indeg[to];

    std::vector<bool> done(n, false);
    Itinerary it;
    it.translation = v;
    it.order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!done[i] && indeg[i] == 0) { pick = i; break; }
        }
        if (pick == n) break;
        done[pick] = true;
        it.order.push_back(pick);
        for (std::size_t to : g.successors[pick])
            if (!done[to]) --indeg[to];
    }
    if (it.order.size() == n) return it;

    // Every residual vertex keeps an undone predecessor (its in-degree never
    // reached zero), so walking predecessors must revisit a vertex; the
    // revisited suffix is a cycle, reported in edge direction.
    std::vector<std::vector<std::size_t>> preds(n);
    for (std::size_t from = 0; from < n; ++from) {
        if (done[from]) continue;
        for (std::size_t to : g.successors[from])
            if (!done[to]) preds[to].push_back(from);
    }
    std::size_t cur = 0;
    while (done[cur]) ++cur;
    std::vector<std::size_t> path;
    std::vector<std::size_t> seen_at(n, n + 1);
    while (seen_at[cur] > n) {
        seen_at[cur] = path.size();
        path.push_back(cur);
        cur = preds[cur].front();
    }
    CycleWitness w;
    w.cycle.assign(path.begin() + seen_at[cur], path.end());
    w.cycle.push_back(cur);
    std::reverse(w.cycle.begin(), w.cycle.end());
    return w;
}

inline bool is_acyclic(const Tbg& g) {
    return std::holds_alternative<Itinerary>(topo_itinerary(g));
}

// Independent simulation: replays the moves in order and checks each swept
// region against every still-unmoved start disc and every already-placed
// target disc. Tangency is allowed.
inline bool validate_itinerary(const Configuration& s, const Configuration& t,
                               const Matching& m, const Vec2& v, const Itinerary& it) {
    std::size_t n = m.size();
    if (it.order.size() != n) return false;
    std::vector<bool> moved(n, false);
    {
        std::vector<bool> seen(n, false);
        for (std::size_t idx : it.order) {
            if (idx >= n || seen[idx]) return false;
            seen[idx] = true;
        }
    }
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t mover = it.order[step];
        Segment path{s.points[m.pairs[mover].first], t.points[m.pairs[mover].second] + v};
        for (std::size_t other = 0; other < n; ++other) {
            if (other == mover) continue;
            const Point& obstacle = moved[other]
                                        ? t.points[m.pairs[other].second] + v
                                        : s.points[m.pairs[other].first];
            if (disc_blocks_segment(obstacle, path)) return false;
        }
        moved[mover] = true;
    }
    return true;
}

}  // namespace sar
