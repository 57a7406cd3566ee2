#pragma once

// Feasibility over convex-combination multipliers, and the intersection
// predicates built on it.
//
// A FeasibilityProblem has one or more generator blocks. Each block b owns
// multipliers lambda_b >= 0 with sum 1 and so names the point
// p_b = sum_k lambda_bk g_bk. Constraints are linear in the p_b:
//
//   sum_b <f_b, p_b>  {=,>=,<=}  rhs
//
// Certificates are exact either way: multipliers on success, a Farkas
// vector (and, from the predicates, a separating functional) on failure.

#include "pdc/approx.hpp"
#include "pdc/lp.hpp"
#include "pdc/rational.hpp"

#include <optional>
#include <vector>

namespace pdc {

struct CombinationConstraint {
    std::vector<Vec> functionals;  // one per block, each of that block's point length
    lp::Relation rel = lp::Relation::eq;
    Rational rhs;
};

struct FeasibilityProblem {
    std::vector<std::vector<Vec>> blocks;
    std::vector<CombinationConstraint> constraints;
};

/// f < bound on every generator of the first set, f >= bound on the second.
struct Separator {
    Vec functional;
    Rational bound;
};

struct Certificate {
    bool feasible = false;
    std::vector<Vec> multipliers;  // per block, when feasible
    Vec farkas;                    // per constraint, then per block convexity row
    std::optional<Separator> separator;

    explicit operator bool() const noexcept { return feasible; }
};

enum class RaySign { nonnegative, nonpositive };

/// Throws MalformedProblem on width mismatches.
Certificate solve_feasibility(const FeasibilityProblem& p);

/// Independent substitution check of either kind of certificate.
bool verify(const FeasibilityProblem& p, const Certificate& c);

/// query in co(points).
Certificate hull_contains(const std::vector<Vec>& points, const Vec& query);

/// Some convex combination has zero gradient part.
Certificate polytope_meets_line(const Polytope& c);

/// Some convex combination has zero gradient part and height of the given sign.
Certificate polytope_meets_ray(const Polytope& c, RaySign sign);

Certificate hulls_intersect(const Polytope& a, const Polytope& b);

/// (beta, d) with beta*height + <d, gradient> < 0 on every vertex of c and
/// >= 0 on the ray. Throws NotSeparable when c meets the ray.
LiftedPoint separating_direction(const Polytope& c, RaySign sign);

// Separator checks, by direct evaluation.
bool separates_point(const std::vector<Vec>& points, const Vec& query, const Separator& s);
bool separates_from_line(const Polytope& c, const Separator& s);
bool separates_from_ray(const Polytope& c, RaySign sign, const Separator& s);
bool separates_hulls(const Polytope& a, const Polytope& b, const Separator& s);

/// The point a feasible certificate names for block b.
Vec combination(const std::vector<Vec>& generators, const Vec& multipliers);

std::vector<Vec> coords_of(const Polytope& p);

const char* to_string(RaySign sign);

} // namespace pdc
