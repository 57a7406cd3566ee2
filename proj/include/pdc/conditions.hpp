#pragma once

// Boundedness and optimality checks for a normalized polyhedral DC function.
//
// Each check is decided along three routes that are equivalent in theory:
//
//   dc              conditions on the pieces (a_i, v_i), (b_j, w_j) directly
//   codifferential  the same conditions read off the min-form codifferential
//   coexhauster     intersection of every coexhauster member with the
//                   height axis L or one of its rays L+ / L-
//
// All routes always run. A disagreement means the LP kernel is wrong and is
// raised as RouteDisagreement.

#include "pdc/approx.hpp"
#include "pdc/dcfunc.hpp"
#include "pdc/geometry.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pdc {

enum class CheckKind { bounded_below, bounded_above, min, max };
enum class Route { dc, codifferential, coexhauster };
enum class WitnessKind { none, direction, point };

inline constexpr std::array<CheckKind, 4> all_checks{CheckKind::bounded_below, CheckKind::bounded_above,
                                                     CheckKind::min, CheckKind::max};
inline constexpr std::array<Route, 3> all_routes{Route::dc, Route::codifferential, Route::coexhauster};

struct RouteResult {
    Route route;
    bool holds = true;
    std::vector<Certificate> elements;  // per j, per i or per member, in index order
};

struct Verdict {
    CheckKind check;
    bool holds = true;
    std::vector<RouteResult> routes;
    std::optional<std::size_t> failing_element;  // 0-based, first failing index
    WitnessKind witness_kind = WitnessKind::none;
    std::optional<Vec> witness;

    const RouteResult& route(Route r) const;
};

/// Bounded below: w_j in co{v_i} for all j, equivalently every member of the
/// upper coexhauster meets L. Witness: d with recession(h, d) < 0.
Verdict bounded_below(const NormalizedDC& h);

/// Bounded above: v_i in co{w_j} for all i, equivalently every member of the
/// lower coexhauster meets L. Witness: d with recession(h, d) > 0.
Verdict bounded_above(const NormalizedDC& h);

/// h >= 0 everywhere. Witness: delta with h(delta) < 0.
Verdict min_condition(const NormalizedDC& h);

/// h <= 0 everywhere. Witness: delta with h(delta) > 0.
Verdict max_condition(const NormalizedDC& h);

Verdict run_check(const NormalizedDC& h, CheckKind kind);

/// Every route for one check, without the agreement test or witness search.
std::vector<RouteResult> evaluate_routes(const NormalizedDC& h, CheckKind kind);

/// Intersection test of an arbitrary coexhauster family against L (no sign)
/// or against L+ / L-.
RouteResult coexhauster_condition(const std::vector<Polytope>& members, std::optional<RaySign> sign);

enum class Stationarity { inf_sufficient, sup_sufficient, both, inconclusive };

struct StationarityReport {
    Verdict min;
    Verdict max;
    Stationarity classification;
    std::string note;
};

/// Requires offset 0 (h is an increment approximation). Throws NonzeroOffset.
StationarityReport stationarity_report(const NormalizedDC& h);

struct AuditRow {
    std::array<std::array<bool, 3>, 4> holds{};  // [check][route]

    bool agrees(CheckKind kind) const;
    bool consistent() const;
};

AuditRow equivalence_audit(const NormalizedDC& h);

struct BoxMinimum {
    Rational value;
    Vec argument;
};

/// min over delta in [-radius, radius]^n of max_k [height_k + <gradient_k, delta>],
/// solved exactly through its LP epigraph.
BoxMinimum minimize_max_form(const std::vector<LiftedPoint>& pieces, const Rational& radius);

/// A point where the max-form of c is negative (sign nonnegative) or the
/// min-form is positive (sign nonpositive), built from the separating
/// functional of a ray test that failed.
Vec point_from_separator(const Polytope& c, RaySign sign, const LiftedPoint& separator);

const char* to_string(CheckKind kind);
const char* to_string(Route route);
const char* to_string(Stationarity s);
const char* to_string(WitnessKind kind);

} // namespace pdc
