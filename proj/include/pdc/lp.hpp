#pragma once

// Exact rational two-phase simplex (dense tableau, Bland's rule).
//
// Problems have nonnegative variables x and rows  coeffs . x  {=,>=,<=}  rhs.
// Without an objective the solver only decides feasibility. On infeasibility
// it returns a Farkas vector y (one entry per row) with
//
//   sum_r y_r A_rj <= 0 for every column j,
//   y_r >= 0 on >= rows, y_r <= 0 on <= rows,
//   sum_r y_r rhs_r > 0,
//
// read off the phase-one dual. Every answer is re-checked by substitution
// before it is returned.

#include "pdc/rational.hpp"

#include <optional>
#include <vector>

namespace pdc::lp {

enum class Relation { eq, ge, le };

struct Row {
    Vec coeffs;
    Relation rel = Relation::eq;
    Rational rhs;
};

struct Problem {
    std::size_t num_vars = 0;
    std::vector<Row> rows;
    std::optional<Vec> minimize;
};

enum class Status { feasible, infeasible, unbounded };

struct Solution {
    Status status = Status::infeasible;
    Vec x;          // feasible: a vertex (optimal when an objective is given)
    Rational objective;
    Vec farkas;     // infeasible: row multipliers
};

Solution solve(const Problem& problem);

/// x >= 0 and every row holds exactly.
bool satisfies(const Problem& problem, const Vec& x);

/// y proves that problem has no nonnegative solution.
bool is_farkas_certificate(const Problem& problem, const Vec& y);

} // namespace pdc::lp
