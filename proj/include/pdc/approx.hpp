#pragma once

// Codifferentials and coexhausters of a normalized polyhedral DC function.
//
// A point of R^{n+1} is written (height, gradient). The codifferential uses
// the min-form sign convention
//
//   h(d) = max_{(a,v) in lower} [a + <v,d>] + min_{(b,w) in upper} [b + <w,d>]
//
// so lower = {(a_i, v_i)} and upper = {(-b_j, -w_j)}. Polytopes are kept as
// the listed generators; no hull reduction is ever performed.

#include "pdc/dcfunc.hpp"
#include "pdc/rational.hpp"

#include <vector>

namespace pdc {

struct LiftedPoint {
    Rational height;
    Vec gradient;

    /// Coordinates as one vector (height first).
    Vec coords() const;
    LiftedPoint operator-() const;

    friend LiftedPoint operator+(const LiftedPoint& a, const LiftedPoint& b);
    friend LiftedPoint operator-(const LiftedPoint& a, const LiftedPoint& b);
    friend bool operator==(const LiftedPoint&, const LiftedPoint&) = default;
};

struct Polytope {
    std::vector<LiftedPoint> vertices;

    /// Gradient length n (the polytope lives in R^{n+1}).
    std::size_t dimension() const { return vertices.front().gradient.size(); }

    /// max over generators of height + <gradient, delta>.
    Rational max_form(const Vec& delta) const;
    /// min over generators of height + <gradient, delta>.
    Rational min_form(const Vec& delta) const;

    friend bool operator==(const Polytope&, const Polytope&) = default;
};

struct Codifferential {
    Polytope lower;  // from plus pieces
    Polytope upper;  // from negated minus pieces
};

enum class CoexhausterKind { upper, lower };

struct Coexhauster {
    CoexhausterKind kind;
    std::vector<Polytope> members;
};

Polytope translate(const Polytope& p, const LiftedPoint& by);

Codifferential to_codifferential(const NormalizedDC& h);

/// Members: cd.lower translated by each vertex of cd.upper, in vertex order.
Coexhauster upper_coexhauster(const Codifferential& cd);

/// Members: cd.upper translated by each vertex of cd.lower, in vertex order.
Coexhauster lower_coexhauster(const Codifferential& cd);

Rational eval_codifferential(const Codifferential& cd, const Vec& delta);

/// upper: min over members of max_form; lower: max over members of min_form.
Rational eval_coexhauster(const Coexhauster& e, const Vec& delta);

const char* to_string(CoexhausterKind kind);

} // namespace pdc
