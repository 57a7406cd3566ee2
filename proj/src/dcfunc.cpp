#include "pdc/dcfunc.hpp"

#include "pdc/error.hpp"

#include <algorithm>

namespace pdc {

namespace {

void require_length(const Vec& v, std::size_t n, const char* where) {
    if (v.size() != n) throw DimensionMismatch(n, v.size(), where);
}

Rational max_constant(const std::vector<AffinePiece>& pieces) {
    Rational m = pieces.front().constant;
    for (const auto& p : pieces) m = std::max(m, p.constant);
    return m;
}

Rational max_slope(const std::vector<AffinePiece>& pieces, const Vec& d) {
    Rational m = dot(pieces.front().gradient, d);
    for (const auto& p : pieces) m = std::max(m, dot(p.gradient, d));
    return m;
}

std::vector<std::size_t> argmax_set(const std::vector<AffinePiece>& pieces, const Vec& x) {
    std::vector<Rational> values;
    values.reserve(pieces.size());
    for (const auto& p : pieces) values.push_back(p.at(x));
    const Rational& best = *std::max_element(values.begin(), values.end());
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == best) idx.push_back(i);
    return idx;
}

std::vector<AffinePiece> shifted(const std::vector<AffinePiece>& pieces, const Rational& by) {
    std::vector<AffinePiece> out = pieces;
    for (auto& p : out) p.constant -= by;
    return out;
}

} // namespace

PolyhedralDC PolyhedralDC::make(std::size_t dimension, std::vector<AffinePiece> plus,
                                std::vector<AffinePiece> minus) {
    if (dimension == 0) throw DimensionMismatch(1, 0, "PolyhedralDC: dimension must be positive");
    if (plus.empty()) throw EmptyPieceList("PolyhedralDC: plus piece list is empty");
    if (minus.empty()) throw EmptyPieceList("PolyhedralDC: minus piece list is empty");
    for (const auto& p : plus) require_length(p.gradient, dimension, "PolyhedralDC plus gradient");
    for (const auto& p : minus) require_length(p.gradient, dimension, "PolyhedralDC minus gradient");
    return PolyhedralDC(dimension, std::move(plus), std::move(minus));
}

Rational max_affine(const std::vector<AffinePiece>& pieces, const Vec& delta) {
    Rational m = pieces.front().at(delta);
    for (const auto& p : pieces) m = std::max(m, p.at(delta));
    return m;
}

Rational eval(const PolyhedralDC& h, const Vec& delta) {
    require_length(delta, h.dimension(), "eval");
    return max_affine(h.plus(), delta) - max_affine(h.minus(), delta);
}

Rational recession(const PolyhedralDC& h, const Vec& direction) {
    require_length(direction, h.dimension(), "recession");
    return max_slope(h.plus(), direction) - max_slope(h.minus(), direction);
}

ActiveSets active_sets(const PolyhedralDC& h, const Vec& point) {
    require_length(point, h.dimension(), "active_sets");
    return {argmax_set(h.plus(), point), argmax_set(h.minus(), point)};
}

Rational directional_derivative(const PolyhedralDC& h, const Vec& point, const Vec& direction) {
    require_length(direction, h.dimension(), "directional_derivative");
    const auto active = active_sets(h, point);
    auto best_slope = [&](const std::vector<AffinePiece>& pieces, const std::vector<std::size_t>& idx) {
        Rational m = dot(pieces[idx.front()].gradient, direction);
        for (auto i : idx) m = std::max(m, dot(pieces[i].gradient, direction));
        return m;
    };
    return best_slope(h.plus(), active.plus) - best_slope(h.minus(), active.minus);
}

NormalizedDC normalize(const PolyhedralDC& h) {
    const Rational top_plus = max_constant(h.plus());
    const Rational top_minus = max_constant(h.minus());
    auto f = PolyhedralDC::make(h.dimension(), shifted(h.plus(), top_plus), shifted(h.minus(), top_minus));
    return NormalizedDC(std::move(f), top_plus - top_minus);
}

NormalizedDC NormalizedDC::assume_normalized(PolyhedralDC h) {
    if (max_constant(h.plus()) != 0 || max_constant(h.minus()) != 0)
        throw NotNormalized("function is not normalized: both constant maxima must be 0");
    return NormalizedDC(std::move(h), Rational(0));
}

} // namespace pdc
