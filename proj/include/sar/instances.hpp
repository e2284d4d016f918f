#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sar/blocking.hpp"
#include "sar/enclosing.hpp"
#include "sar/geometry.hpp"

namespace sar {

struct Instance {
    Configuration start;
    Configuration target;
    bool labeled = false;
    std::optional<Matching> matching;  // present iff labeled
    std::string generator = "unknown";
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

namespace detail {

inline void attach_identity_labels(Instance& inst) {
    inst.labeled = true;
    Matching m = Matching::identity(inst.start.size());
    inst.matching = m;
    inst.start.labels.clear();
    inst.target.labels.clear();
    for (std::size_t i = 0; i < inst.start.size(); ++i) {
        inst.start.labels.push_back(std::to_string(i));
        inst.target.labels.push_back(std::to_string(i));
    }
}

}  // namespace detail

// Points densely placed on a circle (adjacent discs touching); targets are
// the same circle rotated by pi/n.
inline Instance generate_circle(std::size_t n, std::uint64_t seed) {
    Instance inst;
    inst.generator = "circle";
    inst.seed = seed;
    if (n == 1) {
        inst.start.points = {{0.0, 0.0}};
        inst.target.points = {{0.0, 0.0}};
    } else {
        double radius = 1.0 / std::sin(kPi / static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
            inst.start.points.push_back(radius * dir_from_angle(a));
            inst.target.points.push_back(radius * dir_from_angle(a + kPi / static_cast<double>(n)));
        }
    }
    inst.n = inst.start.size();
    return inst;
}

// Grid shape as square-like as possible for the requested count.
inline std::pair<std::size_t, std::size_t> packing_shape(std::size_t n) {
    std::size_t cols = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    cols = std::max<std::size_t>(cols, 1);
    std::size_t rows = static_cast<std::size_t>(std::llround(static_cast<double>(n) / cols));
    rows = std::max<std::size_t>(rows, 1);
    return {rows, cols};
}

// Start: square grid at spacing 2. Target: hexagonal close packing with all
// neighbor distances exactly 2. n is rounded to rows*cols.
inline Instance generate_packing(std::size_t n, std::uint64_t seed) {
    auto [rows, cols] = packing_shape(n);
    Instance inst;
    inst.generator = "packing";
    inst.seed = seed;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            inst.start.points.push_back({2.0 * static_cast<double>(c), 2.0 * static_cast<double>(r)});
    double row_h = std::sqrt(3.0);
    for (std::size_t r = 0; r < rows; ++r) {
        double off = (r % 2 == 1) ? 1.0 : 0.0;
        for (std::size_t c = 0; c < cols; ++c)
            inst.target.points.push_back({2.0 * static_cast<double>(c) + off, row_h * static_cast<double>(r)});
    }
    inst.n = inst.start.size();
    return inst;
}

// Start: discs tightly placed along a vertical line; target: along a
// horizontal line.
inline Instance generate_cross(std::size_t n, std::uint64_t seed) {
    Instance inst;
    inst.generator = "cross";
    inst.seed = seed;
    for (std::size_t i = 0; i < n; ++i) {
        inst.start.points.push_back({0.0, 2.0 * static_cast<double>(i)});
        inst.target.points.push_back({2.0 * static_cast<double>(i), 0.0});
    }
    inst.n = n;
    return inst;
}

// Uniform samples from the square of side 2.6*sqrt(n); draws violating the
// pairwise distance >= 2 requirement are discarded.
inline Instance generate_random(std::size_t n, std::uint64_t seed) {
    Instance inst;
    inst.generator = "random";
    inst.seed = seed;
    inst.n = n;
    Rng rng(seed);
    double side = 2.6 * std::sqrt(static_cast<double>(n));
    auto fill = [&](std::vector<Point>& pts) {
        std::size_t attempts = 0;
        while (pts.size() < n) {
            if (++attempts > 100000) throw std::runtime_error("density too high");
            Point p{rng.uniform(0.0, side), rng.uniform(0.0, side)};
            bool ok = true;
            for (const Point& q : pts) {
                if (dist2(p, q) < 4.0) { ok = false; break; }
            }
            if (ok) pts.push_back(p);
        }
    };
    fill(inst.start.points);
    fill(inst.target.points);
    return inst;
}

inline Instance generate(const std::string& kind, std::size_t n, std::uint64_t seed, bool labeled = false) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    Instance inst;
    if (kind == "circle") inst = generate_circle(n, seed);
    else if (kind == "packing") inst = generate_packing(n, seed);
    else if (kind == "cross") inst = generate_cross(n, seed);
    else if (kind == "random") inst = generate_random(n, seed);
    else throw std::invalid_argument("unknown generator kind: " + kind);
    if (labeled) detail::attach_identity_labels(inst);
    return inst;
}

enum class AlignMode { SedCenters, CenterOfMass };

// Translates the target so both configurations share the chosen center.
inline Instance align(Instance inst, AlignMode mode = AlignMode::SedCenters) {
    Vec2 shift;
    if (mode == AlignMode::SedCenters) {
        shift = smallest_enclosing_disc(inst.start.points).center -
                smallest_enclosing_disc(inst.target.points).center;
    } else {
        Vec2 cs{0.0, 0.0}, ct{0.0, 0.0};
        for (const Point& p : inst.start.points) cs += p;
        for (const Point& p : inst.target.points) ct += p;
        shift = cs / static_cast<double>(inst.start.size()) - ct / static_cast<double>(inst.target.size());
    }
    for (Point& p : inst.target.points) p += shift;
    return inst;
}

// --- JSON persistence ------------------------------------------------------

inline nlohmann::json to_json(const Instance& inst) {
    nlohmann::json j;
    j["version"] = 1;
    j["labeled"] = inst.labeled;
    auto pts = [](const std::vector<Point>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Point& p : v) arr.push_back({p.x, p.y});
        return arr;
    };
    j["start"] = pts(inst.start.points);
    j["target"] = pts(inst.target.points);
    if (inst.labeled && inst.matching) {
        nlohmann::json arr = nlohmann::json::array();
        std::vector<std::size_t> target_of(inst.matching->size());
        for (const auto& [si, ti] : inst.matching->pairs) target_of[si] = ti;
        for (std::size_t ti : target_of) arr.push_back(ti);
        j["matching"] = arr;
    }
    j["metadata"] = {{"generator", inst.generator}, {"n", inst.n}, {"seed", inst.seed}};
    return j;
}

inline Instance instance_from_json(const nlohmann::json& j) {
    auto fail = [](const std::string& path, const std::string& what) -> void {
        throw std::runtime_error("instance parse error at " + path + ": " + what);
    };
    Instance inst;
    if (!j.is_object()) fail("$", "expected object");
    if (j.contains("version") && (!j["version"].is_number_integer() || j["version"].get<int>() != 1))
        fail("$.version", "unsupported schema version");
    if (!j.contains("start") || !j["start"].is_array()) fail("$.start", "expected array of [x,y]");
    if (!j.contains("target") || !j["target"].is_array()) fail("$.target", "expected array of [x,y]");
    auto read_pts = [&](const nlohmann::json& arr, const std::string& path, std::vector<Point>& out) {
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto& e = arr[i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                fail(path + "[" + std::to_string(i) + "]", "expected [x,y] numbers");
            out.push_back({e[0].get<double>(), e[1].get<double>()});
        }
    };
    read_pts(j["start"], "$.start", inst.start.points);
    read_pts(j["target"], "$.target", inst.target.points);
    if (inst.start.size() != inst.target.size()) fail("$.target", "cardinality mismatch");
    if (inst.start.points.empty()) fail("$.start", "empty configuration");
    if (!is_valid_configuration(inst.start)) fail("$.start", "invalid configuration");
    if (!is_valid_configuration(inst.target)) fail("$.target", "invalid configuration");

    inst.labeled = j.value("labeled", false);
    if (j.contains("matching")) {
        if (!inst.labeled) fail("$.matching", "matching requires a labeled instance");
        const auto& arr = j["matching"];
        if (!arr.is_array() || arr.size() != inst.start.size())
            fail("$.matching", "expected one target index per start index");
        Matching m;
        std::vector<bool> used(inst.start.size(), false);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_number_unsigned()) fail("$.matching[" + std::to_string(i) + "]", "expected index");
            std::size_t ti = arr[i].get<std::size_t>();
            if (ti >= inst.start.size() || used[ti])
                fail("$.matching[" + std::to_string(i) + "]", "not a bijection");
            used[ti] = true;
            m.pairs.emplace_back(i, ti);
        }
        inst.matching = m;
    } else if (inst.labeled) {
        inst.matching = Matching::identity(inst.start.size());
    }
    if (j.contains("metadata") && j["metadata"].is_object()) {
        const auto& md = j["metadata"];
        inst.generator = md.value("generator", std::string("unknown"));
        inst.n = md.value("n", inst.start.size());
        inst.seed = md.value("seed", 0ull);
    } else {
        inst.n = inst.start.size();
    }
    return inst;
}

inline void save(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << to_json(inst).dump(2) << "\n";
}

inline Instance load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("instance parse error: ") + e.what());
    }
    return instance_from_json(j);
}

// Matching for solving: explicit for labeled instances, otherwise supplied
// by the caller (e.g. a direction-induced one).
inline Matching instance_matching(const Instance& inst) {
    if (inst.matching) return *inst.matching;
    return Matching::identity(inst.start.size());
}

}  // namespace sar
