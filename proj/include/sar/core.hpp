#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace sar {

inline constexpr double kPi = 3.14159265358979323846;

// Global comparison tolerance. Strict predicates read "x < y - eps",
// weak ones "x <= y + eps". Set once at startup (e.g. from the CLI);
// all operations are pure given a fixed tolerance.
inline double& eps() {
    static double value = 1e-9;
    return value;
}

inline double inf() { return std::numeric_limits<double>::infinity(); }

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

using Point = Vec2;

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm2(const Vec2& a) { return dot(a, a); }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }
inline double dist(const Vec2& a, const Vec2& b) { return norm(a - b); }
inline double dist2(const Vec2& a, const Vec2& b) { return norm2(a - b); }

inline Vec2 normalized(const Vec2& a) {
    double n = norm(a);
    if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
    return a / n;
}

// CCW rotation by 90 degrees.
inline Vec2 perp(const Vec2& a) { return {-a.y, a.x}; }

inline Vec2 rotated(const Vec2& a, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

inline Vec2 dir_from_angle(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline double angle_of(const Vec2& a) { return std::atan2(a.y, a.x); }

// Wraps into [0, 2*pi).
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

// Angular distance between two undirected line directions, in [0, pi/2].
inline double line_angle_dist(double a, double b) {
    double d = std::fabs(std::fmod(a - b, kPi));
    if (d > kPi / 2.0) d = kPi - d;
    return d;
}

// Squared distance from point p to segment [a, b]. Degenerate a == b allowed.
inline double dist2_point_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 ab = b - a;
    double len2 = norm2(ab);
    if (len2 <= 0.0) return dist2(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist2(p, a + ab * t);
}

inline double dist_point_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    return std::sqrt(dist2_point_segment(p, a, b));
}

// Deterministic uniform doubles from a fixed-width engine. The standard
// distributions are not bit-identical across library implementations, so we
// convert raw 64-bit draws ourselves.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // in [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double angle() { return uniform(0.0, 2.0 * kPi); }
    std::uint64_t bits() { return engine_(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

private:
    std::mt19937_64 engine_;
};

// All real roots of a*x^2 + b*x + c = 0 (deduplicated double root).
inline std::vector<double> solve_quadratic(double a, double b, double c) {
    std::vector<double> roots;
    if (std::fabs(a) < 1e-14 * std::max({std::fabs(b), std::fabs(c), 1.0})) {
        if (std::fabs(b) > 0.0) roots.push_back(-c / b);
        return roots;
    }
    double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return roots;
    double sq = std::sqrt(disc);
    // Numerically stable split.
    double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
    roots.push_back(q / a);
    if (sq > 0.0 && q != 0.0) roots.push_back(c / q);
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Roots of a smooth function on [lo, hi] by dense bracketing plus bisection.
// Intended for low-degree trigonometric polynomials whose roots are well
// separated at the sampling resolution.
inline std::vector<double> bracketed_roots(const std::function<double(double)>& f,
                                           double lo, double hi, int samples = 96) {
    std::vector<double> roots;
    if (!(hi > lo)) return roots;
    double prev_t = lo, prev_f = f(lo);
    if (prev_f == 0.0) roots.push_back(lo);
    for (int i = 1; i <= samples; ++i) {
        double t = lo + (hi - lo) * i / samples;
        double ft = f(t);
        if (ft == 0.0) {
            roots.push_back(t);
        } else if (prev_f != 0.0 && ((prev_f < 0.0) != (ft < 0.0))) {
            double a = prev_t, b = t, fa = prev_f;
            for (int it = 0; it < 80; ++it) {
                double m = 0.5 * (a + b), fm = f(m);
                if (fm == 0.0) { a = b = m; break; }
                if ((fa < 0.0) != (fm < 0.0)) b = m; else { a = m; fa = fm; }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_t = t;
        prev_f = ft;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [&](double a, double b) { return std::fabs(a - b) < 1e-12 * (1.0 + std::fabs(a)); }),
                roots.end());
    return roots;
}

// Local minimum of a unimodal-enough function by golden-section refinement.
inline double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters = 120) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters && (b - a) > 1e-14 * (1.0 + std::fabs(a) + std::fabs(b)); ++i) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - g * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + g * (b - a); f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

}  // namespace sar
