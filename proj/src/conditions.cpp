#include "pdc/conditions.hpp"

#include "pdc/error.hpp"

#include <algorithm>

namespace pdc {

namespace {

std::vector<Vec> gradients(const std::vector<AffinePiece>& pieces) {
    std::vector<Vec> out;
    for (const auto& p : pieces) out.push_back(p.gradient);
    return out;
}

std::vector<Vec> gradients(const Polytope& p, bool negate) {
    std::vector<Vec> out;
    for (const auto& v : p.vertices) out.push_back(negate ? scaled(v.gradient, -1) : v.gradient);
    return out;
}

Polytope lifted(const std::vector<AffinePiece>& pieces) {
    Polytope p;
    for (const auto& piece : pieces) p.vertices.push_back({piece.constant, piece.gradient});
    return p;
}

// co{(c, g), (0, g)}
Polytope vertical_segment(const LiftedPoint& top) {
    return Polytope{{top, LiftedPoint{Rational(0), top.gradient}}};
}

RouteResult collect(Route route, std::vector<Certificate> elements) {
    RouteResult r{route, true, std::move(elements)};
    r.holds = std::all_of(r.elements.begin(), r.elements.end(), [](const Certificate& c) { return c.feasible; });
    return r;
}

RouteResult dc_route(const NormalizedDC& h, CheckKind kind) {
    const auto& plus = h.function().plus();
    const auto& minus = h.function().minus();
    std::vector<Certificate> el;
    switch (kind) {
    case CheckKind::bounded_below:
        for (const auto& m : minus) el.push_back(hull_contains(gradients(plus), m.gradient));
        break;
    case CheckKind::bounded_above:
        for (const auto& p : plus) el.push_back(hull_contains(gradients(minus), p.gradient));
        break;
    case CheckKind::min: {
        const auto a = lifted(plus);
        for (const auto& m : minus) el.push_back(hulls_intersect(a, vertical_segment({m.constant, m.gradient})));
        break;
    }
    case CheckKind::max: {
        const auto b = lifted(minus);
        for (const auto& p : plus) el.push_back(hulls_intersect(b, vertical_segment({p.constant, p.gradient})));
        break;
    }
    }
    return collect(Route::dc, std::move(el));
}

// The same conditions in min-form codifferential coordinates, where the
// upper set carries (-b_j, -w_j).
RouteResult codifferential_route(const Codifferential& cd, CheckKind kind) {
    std::vector<Certificate> el;
    switch (kind) {
    case CheckKind::bounded_below:
        for (const auto& u : cd.upper.vertices)
            el.push_back(hull_contains(gradients(cd.lower, false), scaled(u.gradient, -1)));
        break;
    case CheckKind::bounded_above:
        for (const auto& l : cd.lower.vertices) el.push_back(hull_contains(gradients(cd.upper, true), l.gradient));
        break;
    case CheckKind::min:
        for (const auto& u : cd.upper.vertices) el.push_back(hulls_intersect(cd.lower, vertical_segment(-u)));
        break;
    case CheckKind::max:
        for (const auto& l : cd.lower.vertices) el.push_back(hulls_intersect(cd.upper, vertical_segment(-l)));
        break;
    }
    return collect(Route::codifferential, std::move(el));
}

std::optional<RaySign> target_of(CheckKind kind) {
    switch (kind) {
    case CheckKind::min: return RaySign::nonnegative;
    case CheckKind::max: return RaySign::nonpositive;
    default: return std::nullopt;
    }
}

bool uses_upper_coexhauster(CheckKind kind) { return kind == CheckKind::bounded_below || kind == CheckKind::min; }

Coexhauster coexhauster_for(const Codifferential& cd, CheckKind kind) {
    return uses_upper_coexhauster(kind) ? upper_coexhauster(cd) : lower_coexhauster(cd);
}

void require_agreement(const std::vector<RouteResult>& routes, CheckKind kind) {
    const auto& first = routes.front();
    for (const auto& r : routes) {
        bool same = r.holds == first.holds && r.elements.size() == first.elements.size();
        for (std::size_t k = 0; same && k < r.elements.size(); ++k)
            same = r.elements[k].feasible == first.elements[k].feasible;
        if (!same)
            throw RouteDisagreement(std::string(to_string(kind)) + ": route " + to_string(r.route) +
                                    " disagrees with route " + to_string(first.route));
    }
}

Vec normalized_direction(Vec d) {
    Rational biggest = 0;
    for (const auto& x : d) biggest = std::max(biggest, Rational(abs(x)));
    if (biggest != 0)
        for (auto& x : d) x /= biggest;
    return d;
}

std::size_t first_failure(const RouteResult& r) {
    for (std::size_t k = 0; k < r.elements.size(); ++k)
        if (!r.elements[k].feasible) return k;
    throw CertificateError("no failing element in a failed route");
}

constexpr long max_witness_radius = 1L << 16;

Vec point_witness(const Polytope& member, RaySign sign, const Certificate& member_cert) {
    std::vector<LiftedPoint> pieces = member.vertices;
    if (sign == RaySign::nonpositive)
        for (auto& p : pieces) p = -p;
    for (long radius = 1; radius <= max_witness_radius; radius *= 2) {
        auto best = minimize_max_form(pieces, Rational(radius));
        if (best.value < 0) return best.argument;
    }
    const auto& f = member_cert.separator->functional;
    return point_from_separator(member, sign, {f[0], Vec(f.begin() + 1, f.end())});
}

} // namespace

const RouteResult& Verdict::route(Route r) const {
    for (const auto& rr : routes)
        if (rr.route == r) return rr;
    throw std::out_of_range("route not evaluated");
}

RouteResult coexhauster_condition(const std::vector<Polytope>& members, std::optional<RaySign> sign) {
    std::vector<Certificate> el;
    for (const auto& c : members) el.push_back(sign ? polytope_meets_ray(c, *sign) : polytope_meets_line(c));
    return collect(Route::coexhauster, std::move(el));
}

std::vector<RouteResult> evaluate_routes(const NormalizedDC& h, CheckKind kind) {
    const auto cd = to_codifferential(h);
    std::vector<RouteResult> routes;
    routes.push_back(dc_route(h, kind));
    routes.push_back(codifferential_route(cd, kind));
    routes.push_back(coexhauster_condition(coexhauster_for(cd, kind).members, target_of(kind)));
    return routes;
}

Verdict run_check(const NormalizedDC& h, CheckKind kind) {
    Verdict v{kind, true, evaluate_routes(h, kind), std::nullopt, WitnessKind::none, std::nullopt};
    require_agreement(v.routes, kind);
    v.holds = v.routes.front().holds;
    if (v.holds) return v;

    const auto& f = h.function();
    if (kind == CheckKind::bounded_below || kind == CheckKind::bounded_above) {
        const auto& dc = v.route(Route::dc);
        const std::size_t k = first_failure(dc);
        Vec d = normalized_direction(dc.elements[k].separator->functional);
        const Rational slope = recession(f, d);
        if (kind == CheckKind::bounded_below ? slope >= 0 : slope <= 0)
            throw CertificateError("recession witness has the wrong sign");
        v.failing_element = k;
        v.witness_kind = WitnessKind::direction;
        v.witness = std::move(d);
        return v;
    }

    const auto& coex = v.route(Route::coexhauster);
    const std::size_t k = first_failure(coex);
    const auto member = coexhauster_for(to_codifferential(h), kind).members[k];
    const auto sign = *target_of(kind);
    Vec delta = point_witness(member, sign, coex.elements[k]);
    const Rational value = eval(f, delta);
    if (kind == CheckKind::min ? value >= 0 : value <= 0)
        throw CertificateError("point witness does not violate the condition");
    v.failing_element = k;
    v.witness_kind = WitnessKind::point;
    v.witness = std::move(delta);
    return v;
}

Verdict bounded_below(const NormalizedDC& h) { return run_check(h, CheckKind::bounded_below); }
Verdict bounded_above(const NormalizedDC& h) { return run_check(h, CheckKind::bounded_above); }
Verdict min_condition(const NormalizedDC& h) { return run_check(h, CheckKind::min); }
Verdict max_condition(const NormalizedDC& h) { return run_check(h, CheckKind::max); }

BoxMinimum minimize_max_form(const std::vector<LiftedPoint>& pieces, const Rational& radius) {
    // Variables x (delta = x - radius, 0 <= x <= 2 radius), t+, t-.
    const std::size_t n = pieces.front().gradient.size();
    lp::Problem p;
    p.num_vars = n + 2;
    for (const auto& piece : pieces) {
        lp::Row row{Vec(n + 2, Rational(0)), lp::Relation::ge, piece.height};
        for (std::size_t k = 0; k < n; ++k) {
            row.coeffs[k] = -piece.gradient[k];
            row.rhs -= radius * piece.gradient[k];
        }
        row.coeffs[n] = 1;
        row.coeffs[n + 1] = -1;
        p.rows.push_back(std::move(row));
    }
    for (std::size_t k = 0; k < n; ++k) {
        lp::Row row{Vec(n + 2, Rational(0)), lp::Relation::le, 2 * radius};
        row.coeffs[k] = 1;
        p.rows.push_back(std::move(row));
    }
    Vec cost(n + 2, Rational(0));
    cost[n] = 1;
    cost[n + 1] = -1;
    p.minimize = cost;

    const auto sol = lp::solve(p);
    if (sol.status != lp::Status::feasible) throw CertificateError("box epigraph LP did not reach an optimum");
    BoxMinimum out{sol.objective, Vec(n)};
    for (std::size_t k = 0; k < n; ++k) out.argument[k] = sol.x[k] - radius;
    return out;
}

Vec point_from_separator(const Polytope& c, RaySign sign, const LiftedPoint& separator) {
    const bool lower_side = sign == RaySign::nonnegative;
    for (const auto& v : c.vertices)
        if (separator.height * v.height + dot(separator.gradient, v.gradient) >= 0)
            throw CertificateError("functional does not separate the polytope from the ray");
    if (lower_side ? separator.height < 0 : separator.height > 0)
        throw CertificateError("functional is negative somewhere on the ray");
    auto violates = [&](const Vec& delta) {
        return lower_side ? c.max_form(delta) < 0 : c.min_form(delta) > 0;
    };
    if (separator.height != 0) {
        Vec delta = scaled(separator.gradient, 1 / separator.height);
        if (!violates(delta)) throw CertificateError("separator point does not violate the ray condition");
        return delta;
    }
    // Purely directional separator: move along it until the form changes sign.
    const Vec dir = lower_side ? separator.gradient : scaled(separator.gradient, -1);
    for (Rational t = 1;; t *= 2) {
        Vec delta = scaled(dir, t);
        if (violates(delta)) return delta;
    }
}

StationarityReport stationarity_report(const NormalizedDC& h) {
    if (h.offset() != 0)
        throw NonzeroOffset("stationarity needs h(0) = 0, got offset " + to_string(h.offset()));
    StationarityReport r{min_condition(h), max_condition(h), Stationarity::inconclusive, {}};
    if (r.min.holds && r.max.holds)
        r.classification = Stationarity::both;
    else if (r.min.holds)
        r.classification = Stationarity::inf_sufficient;
    else if (r.max.holds)
        r.classification = Stationarity::sup_sufficient;
    r.note = "h >= 0 is sufficient for inf-stationarity and h <= 0 for sup-stationarity; "
             "a failed sufficient condition does not refute stationarity";
    return r;
}

bool AuditRow::agrees(CheckKind kind) const {
    const auto& row = holds[static_cast<std::size_t>(kind)];
    return row[0] == row[1] && row[1] == row[2];
}

bool AuditRow::consistent() const {
    return std::all_of(all_checks.begin(), all_checks.end(), [&](CheckKind k) { return agrees(k); });
}

AuditRow equivalence_audit(const NormalizedDC& h) {
    AuditRow row;
    for (auto kind : all_checks) {
        const auto routes = evaluate_routes(h, kind);
        for (std::size_t r = 0; r < routes.size(); ++r) row.holds[static_cast<std::size_t>(kind)][r] = routes[r].holds;
    }
    return row;
}

const char* to_string(CheckKind kind) {
    switch (kind) {
    case CheckKind::bounded_below: return "bounded-below";
    case CheckKind::bounded_above: return "bounded-above";
    case CheckKind::min: return "min";
    case CheckKind::max: return "max";
    }
    return "?";
}

const char* to_string(Route route) {
    switch (route) {
    case Route::dc: return "dc";
    case Route::codifferential: return "codifferential";
    case Route::coexhauster: return "coexhauster";
    }
    return "?";
}

const char* to_string(Stationarity s) {
    switch (s) {
    case Stationarity::inf_sufficient: return "inf-stationary-sufficient";
    case Stationarity::sup_sufficient: return "sup-stationary-sufficient";
    case Stationarity::both: return "both";
    case Stationarity::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(WitnessKind kind) {
    switch (kind) {
    case WitnessKind::none: return "none";
    case WitnessKind::direction: return "direction";
    case WitnessKind::point: return "point";
    }
    return "?";
}

} // namespace pdc
