#pragma once

// Brute-force falsifiers for the checkers: exact lattice search for a
// negative (positive) value of h, and sampling of the recession function.
// They can only refute. Silence proves nothing.

#include "pdc/dcfunc.hpp"
#include "pdc/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pdc {

/// Lattice {-radius + k*step : k = 0..2*radius/step}^dimension.
struct GridSpec {
    Rational radius;
    Rational step;
    std::size_t dimension = 1;

    /// Throws InvalidGrid unless radius, step > 0, step <= 2*radius and
    /// 2*radius/step is an integer.
    void validate() const;
    std::size_t points_per_axis() const;
    /// Total lattice size, saturating at limit + 1.
    std::size_t total_points(std::size_t limit) const;
    Rational coordinate(std::size_t k) const { return -radius + step * static_cast<unsigned long>(k); }
};

struct GridExtremum {
    Rational value;
    Vec argument;  // lexicographically smallest among ties
};

enum class Extremum { min, max };

inline constexpr std::size_t default_point_budget = 10'000'000;

/// default_point_budget, or PDC_POINT_BUDGET when set to a positive integer.
std::size_t point_budget();

/// Exact extremum of eval(h, .) over the lattice. Uses the parallel integer
/// kernel when the scaled values fit in 64 bits, the serial reference
/// otherwise. Throws GridTooLarge past the budget.
GridExtremum grid_min(const PolyhedralDC& h, const GridSpec& g, std::size_t budget = point_budget());
GridExtremum grid_max(const PolyhedralDC& h, const GridSpec& g, std::size_t budget = point_budget());

namespace reference {
/// Serial, all-rational lattice scan. Kept as the ground truth for the kernel.
GridExtremum grid_extremum(const PolyhedralDC& h, const GridSpec& g, Extremum sense,
                           std::size_t budget = point_budget());
} // namespace reference

namespace parallel {
/// OpenMP lattice scan on values scaled to a common integer denominator.
/// nullopt when the scaled magnitudes could overflow int64.
std::optional<GridExtremum> grid_extremum(const PolyhedralDC& h, const GridSpec& g, Extremum sense,
                                          std::size_t budget = point_budget());
} // namespace parallel

enum class RecessionSign { negative, positive };

/// Deterministic direction set: {1, -1} when n = 1; otherwise the signed
/// axes followed by a Halton sequence in (-1, 1)^n whose start is derived
/// from instance_hash(h).
std::vector<Vec> recession_directions(const PolyhedralDC& h, std::size_t count);

/// First sampled d with recession(h, d) < 0 (or > 0).
std::optional<Vec> sample_recession(const PolyhedralDC& h, std::size_t count,
                                    RecessionSign target = RecessionSign::negative);

/// FNV-1a over the canonical text of the pieces.
std::uint64_t instance_hash(const PolyhedralDC& h);

} // namespace pdc
