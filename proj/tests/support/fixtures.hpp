#pragma once

// Instances used across the suites, and brute-force helpers that only
// touch eval()/recession() so they stay independent of the LP kernel.

#include "pdc/approx.hpp"
#include "pdc/dcfunc.hpp"
#include "pdc/rational.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace fixtures {

using pdc::AffinePiece;
using pdc::LiftedPoint;
using pdc::PolyhedralDC;
using pdc::Polytope;
using pdc::Rational;
using pdc::Vec;

inline Rational q(long num, long den = 1) { return pdc::make_rational(num, den); }

inline Vec vec(std::initializer_list<Rational> xs) { return Vec(xs); }

inline AffinePiece piece(long c, std::initializer_list<long> g) {
    AffinePiece p{q(c), {}};
    for (long x : g) p.gradient.push_back(q(x));
    return p;
}

inline LiftedPoint pt(long h, std::initializer_list<long> g) {
    LiftedPoint p{q(h), {}};
    for (long x : g) p.gradient.push_back(q(x));
    return p;
}

inline Polytope poly(std::initializer_list<LiftedPoint> pts) { return Polytope{std::vector<LiftedPoint>(pts)}; }

// max{2d-4, 0, -2d-4} - max{d-1, 0, -d-1}
inline PolyhedralDC example1() {
    return PolyhedralDC::make(1, {piece(-4, {2}), piece(0, {0}), piece(-4, {-2})},
                              {piece(-1, {1}), piece(0, {0}), piece(-1, {-1})});
}

// Linearization at x1 = 0.
inline PolyhedralDC example2_x1() {
    return PolyhedralDC::make(1, {piece(0, {2}), piece(0, {-2}), piece(0, {0})},
                              {piece(-1, {1}), piece(-1, {-1}), piece(0, {0})});
}

// Linearization at x2 = 1.
inline PolyhedralDC example2_x2() {
    return PolyhedralDC::make(1, {piece(0, {0}), piece(-4, {-4}), piece(-1, {0})},
                              {piece(0, {1}), piece(-2, {-1}), piece(0, {0})});
}

inline PolyhedralDC zero_function() { return PolyhedralDC::make(1, {piece(0, {0})}, {piece(0, {0})}); }

// -|d|
inline PolyhedralDC negative_abs() { return PolyhedralDC::make(1, {piece(0, {0})}, {piece(0, {1}), piece(0, {-1})}); }

/// Exhaustive lattice scan by plain nested loops, n = 1 or 2 only.
struct BruteExtremum {
    Rational min;
    Rational max;
    Vec argmin;  // lexicographically first
};

inline BruteExtremum brute_force(const PolyhedralDC& h, long radius, long inverse_step) {
    BruteExtremum out;
    bool first = true;
    const long k_max = 2 * radius * inverse_step;
    auto visit = [&](const Vec& d) {
        const Rational v = pdc::eval(h, d);
        if (first || v < out.min) {
            out.min = v;
            out.argmin = d;
        }
        if (first || v > out.max) out.max = v;
        first = false;
    };
    for (long a = 0; a <= k_max; ++a) {
        const Rational x = q(-radius) + q(a, inverse_step);
        if (h.dimension() == 1) {
            visit({x});
            continue;
        }
        for (long b = 0; b <= k_max; ++b) visit({x, q(-radius) + q(b, inverse_step)});
    }
    return out;
}

/// Derivative by difference quotients, halving t until four consecutive
/// quotients agree (h is piecewise affine, so they eventually do exactly;
/// two equal quotients alone can straddle a kink by coincidence).
inline Rational difference_quotient(const PolyhedralDC& h, const Vec& x, const Vec& d) {
    const Rational hx = pdc::eval(h, x);
    auto quotient = [&](const Rational& t) {
        Vec y = x;
        for (std::size_t k = 0; k < y.size(); ++k) y[k] += t * d[k];
        return Rational((pdc::eval(h, y) - hx) / t);
    };
    Rational t = 1;
    Rational prev = quotient(t);
    int streak = 1;
    for (int i = 0; i < 200; ++i) {
        t /= 2;
        Rational cur = quotient(t);
        streak = cur == prev ? streak + 1 : 1;
        if (streak == 4) return cur;
        prev = cur;
    }
    return prev;
}

/// Multiset equality of vertex lists.
inline bool same_vertices(const Polytope& a, const Polytope& b) {
    if (a.vertices.size() != b.vertices.size()) return false;
    std::vector<bool> used(b.vertices.size(), false);
    for (const auto& v : a.vertices) {
        bool found = false;
        for (std::size_t k = 0; k < b.vertices.size() && !found; ++k)
            if (!used[k] && b.vertices[k] == v) used[k] = found = true;
        if (!found) return false;
    }
    return true;
}

struct CommandResult {
    int status = -1;
    std::string output;
};

inline CommandResult run(const std::string& command) {
    CommandResult r;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace fixtures
