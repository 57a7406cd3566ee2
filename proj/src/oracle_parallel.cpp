#include "pdc/error.hpp"
#include "pdc/oracle.hpp"

#include <omp.h>

#include <cstdint>
#include <limits>

namespace pdc::parallel {

namespace {

struct ScaledPieces {
    std::vector<std::int64_t> constants;
    std::vector<std::int64_t> gradients;  // row-major, n per piece
};

mpz_class lcm_of_denominators(const PolyhedralDC& h) {
    mpz_class d = 1;
    auto absorb = [&](const Rational& r) { mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r.get_den_mpz_t()); };
    for (const auto* list : {&h.plus(), &h.minus()})
        for (const auto& p : *list) {
            absorb(p.constant);
            for (const auto& v : p.gradient) absorb(v);
        }
    return d;
}

// Piece values times scale fit comfortably when each stays below 2^61;
// a difference of two then fits int64.
const mpz_class magnitude_limit = mpz_class(1) << 61;

std::optional<ScaledPieces> scale(const std::vector<AffinePiece>& pieces, const mpz_class& denom,
                                  const mpz_class& grid_denom, const mpz_class& max_coord) {
    ScaledPieces out;
    for (const auto& p : pieces) {
        mpz_class c = mpz_class(p.constant * denom * grid_denom);  // exact integer
        mpz_class bound = abs(c);
        if (!c.fits_slong_p()) return std::nullopt;
        out.constants.push_back(c.get_si());
        for (const auto& v : p.gradient) {
            mpz_class s = mpz_class(v * denom);
            bound += abs(s) * max_coord;
            if (!s.fits_slong_p()) return std::nullopt;
            out.gradients.push_back(s.get_si());
        }
        if (bound >= magnitude_limit) return std::nullopt;
    }
    return out;
}

inline std::int64_t max_piece(const ScaledPieces& s, std::size_t n, const std::int64_t* g) {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i < s.constants.size(); ++i) {
        std::int64_t v = s.constants[i];
        const std::int64_t* row = &s.gradients[i * n];
        for (std::size_t k = 0; k < n; ++k) v += row[k] * g[k];
        if (v > best) best = v;
    }
    return best;
}

} // namespace

std::optional<GridExtremum> grid_extremum(const PolyhedralDC& h, const GridSpec& g, Extremum sense,
                                          std::size_t budget) {
    g.validate();
    if (g.dimension != h.dimension()) throw DimensionMismatch(h.dimension(), g.dimension, "grid");
    const std::size_t total = g.total_points(budget);
    if (total > budget) throw GridTooLarge("lattice exceeds the point budget of " + std::to_string(budget));

    // Lattice coordinates are integers over grid_denom; piece data over denom.
    mpz_class grid_denom;
    mpz_lcm(grid_denom.get_mpz_t(), g.radius.get_den_mpz_t(), g.step.get_den_mpz_t());
    const mpz_class denom = lcm_of_denominators(h);
    const mpz_class start = mpz_class(-g.radius * grid_denom);
    const mpz_class stride = mpz_class(g.step * grid_denom);
    if (!start.fits_slong_p() || !stride.fits_slong_p()) return std::nullopt;
    const mpz_class max_coord = abs(start);

    const auto plus = scale(h.plus(), denom, grid_denom, max_coord);
    const auto minus = scale(h.minus(), denom, grid_denom, max_coord);
    if (!plus || !minus) return std::nullopt;

    const std::size_t n = g.dimension;
    const std::size_t per_axis = g.points_per_axis();
    const std::int64_t origin = start.get_si();
    const std::int64_t step = stride.get_si();
    const std::int64_t sign = sense == Extremum::min ? 1 : -1;
    const auto count = static_cast<std::int64_t>(total);

    // Minimize sign * value; ties go to the smaller linear (= lexicographic) index.
    std::int64_t best_value = std::numeric_limits<std::int64_t>::max();
    std::int64_t best_index = count;

#pragma omp parallel
    {
        std::int64_t local_value = std::numeric_limits<std::int64_t>::max();
        std::int64_t local_index = count;
        std::vector<std::int64_t> coord(n);

#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < count; ++idx) {
            auto rest = static_cast<std::size_t>(idx);
            for (std::size_t k = n; k-- > 0;) {
                coord[k] = origin + static_cast<std::int64_t>(rest % per_axis) * step;
                rest /= per_axis;
            }
            const std::int64_t v = sign * (max_piece(*plus, n, coord.data()) - max_piece(*minus, n, coord.data()));
            if (v < local_value || (v == local_value && idx < local_index)) {
                local_value = v;
                local_index = idx;
            }
        }

#pragma omp critical(pdc_grid_merge)
        {
            if (local_value < best_value || (local_value == best_value && local_index < best_index)) {
                best_value = local_value;
                best_index = local_index;
            }
        }
    }

    GridExtremum out;
    out.value = Rational(mpz_class(static_cast<long>(sign * best_value)), denom * grid_denom);
    out.value.canonicalize();
    out.argument.resize(n);
    auto rest = static_cast<std::size_t>(best_index);
    for (std::size_t k = n; k-- > 0;) {
        out.argument[k] = g.coordinate(rest % per_axis);
        rest /= per_axis;
    }
    return out;
}

} // namespace pdc::parallel
