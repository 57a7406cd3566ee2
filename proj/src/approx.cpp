#include "pdc/approx.hpp"

#include "pdc/error.hpp"

#include <algorithm>

namespace pdc {

namespace {

void require_length(const Vec& v, std::size_t n, const char* where) {
    if (v.size() != n) throw DimensionMismatch(n, v.size(), where);
}

Rational value_at(const LiftedPoint& p, const Vec& delta) { return p.height + dot(p.gradient, delta); }

} // namespace

Vec LiftedPoint::coords() const {
    Vec c;
    c.reserve(gradient.size() + 1);
    c.push_back(height);
    c.insert(c.end(), gradient.begin(), gradient.end());
    return c;
}

LiftedPoint LiftedPoint::operator-() const { return {-height, scaled(gradient, -1)}; }

LiftedPoint operator+(const LiftedPoint& a, const LiftedPoint& b) {
    LiftedPoint r{a.height + b.height, a.gradient};
    for (std::size_t k = 0; k < r.gradient.size(); ++k) r.gradient[k] += b.gradient[k];
    return r;
}

LiftedPoint operator-(const LiftedPoint& a, const LiftedPoint& b) { return a + (-b); }

Rational Polytope::max_form(const Vec& delta) const {
    require_length(delta, dimension(), "Polytope::max_form");
    Rational m = value_at(vertices.front(), delta);
    for (const auto& p : vertices) m = std::max(m, value_at(p, delta));
    return m;
}

Rational Polytope::min_form(const Vec& delta) const {
    require_length(delta, dimension(), "Polytope::min_form");
    Rational m = value_at(vertices.front(), delta);
    for (const auto& p : vertices) m = std::min(m, value_at(p, delta));
    return m;
}

Polytope translate(const Polytope& p, const LiftedPoint& by) {
    Polytope out;
    out.vertices.reserve(p.vertices.size());
    for (const auto& v : p.vertices) out.vertices.push_back(v + by);
    return out;
}

Codifferential to_codifferential(const NormalizedDC& h) {
    Codifferential cd;
    for (const auto& p : h.function().plus()) cd.lower.vertices.push_back({p.constant, p.gradient});
    for (const auto& p : h.function().minus()) cd.upper.vertices.push_back(-LiftedPoint{p.constant, p.gradient});
    return cd;
}

Coexhauster upper_coexhauster(const Codifferential& cd) {
    Coexhauster e{CoexhausterKind::upper, {}};
    for (const auto& u : cd.upper.vertices) e.members.push_back(translate(cd.lower, u));
    return e;
}

Coexhauster lower_coexhauster(const Codifferential& cd) {
    Coexhauster e{CoexhausterKind::lower, {}};
    for (const auto& l : cd.lower.vertices) e.members.push_back(translate(cd.upper, l));
    return e;
}

Rational eval_codifferential(const Codifferential& cd, const Vec& delta) {
    return cd.lower.max_form(delta) + cd.upper.min_form(delta);
}

Rational eval_coexhauster(const Coexhauster& e, const Vec& delta) {
    const bool upper = e.kind == CoexhausterKind::upper;
    auto member_value = [&](const Polytope& c) { return upper ? c.max_form(delta) : c.min_form(delta); };
    Rational best = member_value(e.members.front());
    for (const auto& c : e.members) {
        Rational v = member_value(c);
        best = upper ? std::min(best, v) : std::max(best, v);
    }
    return best;
}

const char* to_string(CoexhausterKind kind) {
    return kind == CoexhausterKind::upper ? "upper" : "lower";
}

} // namespace pdc
