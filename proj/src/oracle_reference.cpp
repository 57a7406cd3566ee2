#include "pdc/error.hpp"
#include "pdc/oracle.hpp"

namespace pdc {

void GridSpec::validate() const {
    if (dimension == 0) throw InvalidGrid("grid dimension must be positive");
    if (radius <= 0 || step <= 0) throw InvalidGrid("grid radius and step must be positive");
    if (step > 2 * radius) throw InvalidGrid("grid step exceeds the box width");
    const Rational cells = 2 * radius / step;
    if (cells.get_den() != 1) throw InvalidGrid("2*radius/step must be an integer");
    if (!cells.get_num().fits_ulong_p()) throw InvalidGrid("grid too fine");
}

std::size_t GridSpec::points_per_axis() const {
    const Rational cells = 2 * radius / step;
    return cells.get_num().get_ui() + 1;
}

std::size_t GridSpec::total_points(std::size_t limit) const {
    const std::size_t per_axis = points_per_axis();
    std::size_t total = 1;
    for (std::size_t k = 0; k < dimension; ++k) {
        if (total > (limit + 1) / per_axis) return limit + 1;
        total *= per_axis;
    }
    return std::min(total, limit + 1);
}

namespace reference {

GridExtremum grid_extremum(const PolyhedralDC& h, const GridSpec& g, Extremum sense, std::size_t budget) {
    g.validate();
    if (g.dimension != h.dimension()) throw DimensionMismatch(h.dimension(), g.dimension, "grid");
    const std::size_t total = g.total_points(budget);
    if (total > budget) throw GridTooLarge("lattice exceeds the point budget of " + std::to_string(budget));

    const std::size_t per_axis = g.points_per_axis();
    Vec delta(g.dimension);
    std::optional<GridExtremum> best;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (std::size_t k = g.dimension; k-- > 0;) {
            delta[k] = g.coordinate(rest % per_axis);
            rest /= per_axis;
        }
        Rational value = eval(h, delta);
        const bool better = !best || (sense == Extremum::min ? value < best->value : value > best->value);
        if (better) best = GridExtremum{std::move(value), delta};
    }
    return *best;
}

} // namespace reference
} // namespace pdc
