#include "pdc/geometry.hpp"

#include "pdc/error.hpp"

namespace pdc {

namespace {

std::size_t point_length(const std::vector<Vec>& block) { return block.front().size(); }

void validate(const FeasibilityProblem& p) {
    if (p.blocks.empty()) throw MalformedProblem("feasibility problem has no generator blocks");
    for (const auto& block : p.blocks) {
        if (block.empty()) throw MalformedProblem("empty generator block");
        for (const auto& g : block)
            if (g.size() != point_length(block)) throw MalformedProblem("generators of unequal length in a block");
    }
    for (const auto& c : p.constraints) {
        if (c.functionals.size() != p.blocks.size())
            throw MalformedProblem("constraint does not carry one functional per block");
        for (std::size_t b = 0; b < p.blocks.size(); ++b)
            if (!c.functionals[b].empty() && c.functionals[b].size() != point_length(p.blocks[b]))
                throw MalformedProblem("constraint functional width does not match block point length");
    }
}

lp::Problem compile(const FeasibilityProblem& p) {
    lp::Problem lp;
    for (const auto& block : p.blocks) lp.num_vars += block.size();
    for (const auto& c : p.constraints) {
        lp::Row row{Vec(), c.rel, c.rhs};
        row.coeffs.reserve(lp.num_vars);
        for (std::size_t b = 0; b < p.blocks.size(); ++b)
            for (const auto& g : p.blocks[b])
                row.coeffs.push_back(c.functionals[b].empty() ? Rational(0) : dot(c.functionals[b], g));
        lp.rows.push_back(std::move(row));
    }
    std::size_t offset = 0;
    for (const auto& block : p.blocks) {
        lp::Row row{Vec(lp.num_vars, Rational(0)), lp::Relation::eq, Rational(1)};
        for (std::size_t k = 0; k < block.size(); ++k) row.coeffs[offset + k] = 1;
        offset += block.size();
        lp.rows.push_back(std::move(row));
    }
    return lp;
}

Vec unit(std::size_t n, std::size_t k, long value = 1) {
    Vec e(n, Rational(0));
    e[k] = value;
    return e;
}

void require_separation(bool ok) {
    if (!ok) throw CertificateError("separating functional failed its evaluation check");
}

FeasibilityProblem ray_problem(const Polytope& c, std::optional<RaySign> sign) {
    const std::size_t len = c.dimension() + 1;
    FeasibilityProblem p{{coords_of(c)}, {}};
    for (std::size_t k = 1; k < len; ++k) p.constraints.push_back({{unit(len, k)}, lp::Relation::eq, Rational(0)});
    if (sign)
        p.constraints.push_back({{unit(len, 0)},
                                 *sign == RaySign::nonnegative ? lp::Relation::ge : lp::Relation::le,
                                 Rational(0)});
    return p;
}

// Functional (y_h, y_g) from the Farkas vector of ray_problem.
Separator ray_separator(const Polytope& c, const Certificate& cert, bool with_height) {
    const std::size_t n = c.dimension();
    Separator s{Vec(n + 1, Rational(0)), Rational(0)};
    for (std::size_t k = 0; k < n; ++k) s.functional[k + 1] = cert.farkas[k];
    if (with_height) s.functional[0] = cert.farkas[n];
    return s;
}

} // namespace

std::vector<Vec> coords_of(const Polytope& p) {
    std::vector<Vec> out;
    out.reserve(p.vertices.size());
    for (const auto& v : p.vertices) out.push_back(v.coords());
    return out;
}

Vec combination(const std::vector<Vec>& generators, const Vec& multipliers) {
    Vec point(generators.front().size(), Rational(0));
    for (std::size_t k = 0; k < generators.size(); ++k)
        for (std::size_t i = 0; i < point.size(); ++i) point[i] += multipliers[k] * generators[k][i];
    return point;
}

Certificate solve_feasibility(const FeasibilityProblem& p) {
    validate(p);
    const auto problem = compile(p);
    const auto sol = lp::solve(problem);

    Certificate cert;
    if (sol.status == lp::Status::feasible) {
        cert.feasible = true;
        std::size_t offset = 0;
        for (const auto& block : p.blocks) {
            cert.multipliers.emplace_back(sol.x.begin() + offset, sol.x.begin() + offset + block.size());
            offset += block.size();
        }
    } else {
        cert.farkas = sol.farkas;
    }
    if (!verify(p, cert)) throw CertificateError("feasibility certificate failed substitution");
    return cert;
}

bool verify(const FeasibilityProblem& p, const Certificate& c) {
    if (c.feasible) {
        if (c.multipliers.size() != p.blocks.size()) return false;
        std::vector<Vec> points;
        for (std::size_t b = 0; b < p.blocks.size(); ++b) {
            const auto& lambda = c.multipliers[b];
            if (lambda.size() != p.blocks[b].size()) return false;
            Rational total = 0;
            for (const auto& l : lambda) {
                if (l < 0) return false;
                total += l;
            }
            if (total != 1) return false;
            points.push_back(combination(p.blocks[b], lambda));
        }
        for (const auto& con : p.constraints) {
            Rational lhs = 0;
            for (std::size_t b = 0; b < p.blocks.size(); ++b)
                if (!con.functionals[b].empty()) lhs += dot(con.functionals[b], points[b]);
            if (con.rel == lp::Relation::eq && lhs != con.rhs) return false;
            if (con.rel == lp::Relation::ge && lhs < con.rhs) return false;
            if (con.rel == lp::Relation::le && lhs > con.rhs) return false;
        }
        return true;
    }

    // Farkas: y per constraint, z per block.
    //   sum_c y_c <f_cb, g> + z_b <= 0 for every generator g of block b
    //   sum_c y_c rhs_c + sum_b z_b > 0
    const std::size_t nc = p.constraints.size();
    if (c.farkas.size() != nc + p.blocks.size()) return false;
    Rational value = 0;
    for (std::size_t i = 0; i < nc; ++i) {
        const auto rel = p.constraints[i].rel;
        if (rel == lp::Relation::ge && c.farkas[i] < 0) return false;
        if (rel == lp::Relation::le && c.farkas[i] > 0) return false;
        value += c.farkas[i] * p.constraints[i].rhs;
    }
    for (std::size_t b = 0; b < p.blocks.size(); ++b) value += c.farkas[nc + b];
    if (value <= 0) return false;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        for (const auto& g : p.blocks[b]) {
            Rational s = c.farkas[nc + b];
            for (std::size_t i = 0; i < nc; ++i)
                if (!p.constraints[i].functionals[b].empty())
                    s += c.farkas[i] * dot(p.constraints[i].functionals[b], g);
            if (s > 0) return false;
        }
    }
    return true;
}

Certificate hull_contains(const std::vector<Vec>& points, const Vec& query) {
    const std::size_t n = query.size();
    for (const auto& p : points)
        if (p.size() != n) throw DimensionMismatch(n, p.size(), "hull_contains");
    FeasibilityProblem p{{points}, {}};
    for (std::size_t k = 0; k < n; ++k) p.constraints.push_back({{unit(n, k)}, lp::Relation::eq, query[k]});
    auto cert = solve_feasibility(p);
    if (!cert.feasible) {
        Separator s{Vec(cert.farkas.begin(), cert.farkas.begin() + n), Rational(0)};
        s.bound = dot(s.functional, query);
        require_separation(separates_point(points, query, s));
        cert.separator = std::move(s);
    }
    return cert;
}

Certificate polytope_meets_line(const Polytope& c) {
    auto cert = solve_feasibility(ray_problem(c, std::nullopt));
    if (!cert.feasible) {
        auto s = ray_separator(c, cert, false);
        require_separation(separates_from_line(c, s));
        cert.separator = std::move(s);
    }
    return cert;
}

Certificate polytope_meets_ray(const Polytope& c, RaySign sign) {
    auto cert = solve_feasibility(ray_problem(c, sign));
    if (!cert.feasible) {
        auto s = ray_separator(c, cert, true);
        require_separation(separates_from_ray(c, sign, s));
        cert.separator = std::move(s);
    }
    return cert;
}

Certificate hulls_intersect(const Polytope& a, const Polytope& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension(), "hulls_intersect");
    const std::size_t len = a.dimension() + 1;
    FeasibilityProblem p{{coords_of(a), coords_of(b)}, {}};
    for (std::size_t k = 0; k < len; ++k)
        p.constraints.push_back({{unit(len, k), unit(len, k, -1)}, lp::Relation::eq, Rational(0)});
    auto cert = solve_feasibility(p);
    if (!cert.feasible) {
        Separator s{Vec(cert.farkas.begin(), cert.farkas.begin() + len), cert.farkas[len + 1]};
        require_separation(separates_hulls(a, b, s));
        cert.separator = std::move(s);
    }
    return cert;
}

LiftedPoint separating_direction(const Polytope& c, RaySign sign) {
    const auto cert = polytope_meets_ray(c, sign);
    if (cert.feasible) throw NotSeparable("polytope meets the " + std::string(to_string(sign)) + " ray");
    const auto& f = cert.separator->functional;
    return {f[0], Vec(f.begin() + 1, f.end())};
}

bool separates_point(const std::vector<Vec>& points, const Vec& query, const Separator& s) {
    for (const auto& p : points)
        if (dot(s.functional, p) >= s.bound) return false;
    return dot(s.functional, query) >= s.bound;
}

bool separates_from_line(const Polytope& c, const Separator& s) {
    // f(a, 0) = f_0 * a must be >= bound for every real a.
    if (s.functional[0] != 0 || s.bound > 0) return false;
    for (const auto& v : c.vertices)
        if (dot(s.functional, v.coords()) >= s.bound) return false;
    return true;
}

bool separates_from_ray(const Polytope& c, RaySign sign, const Separator& s) {
    // f(a, 0) = f_0 * a >= bound for all a on the ray: needs bound <= 0 and
    // f_0 of the ray's sign.
    if (s.bound > 0) return false;
    if (sign == RaySign::nonnegative && s.functional[0] < 0) return false;
    if (sign == RaySign::nonpositive && s.functional[0] > 0) return false;
    for (const auto& v : c.vertices)
        if (dot(s.functional, v.coords()) >= s.bound) return false;
    return true;
}

bool separates_hulls(const Polytope& a, const Polytope& b, const Separator& s) {
    for (const auto& v : a.vertices)
        if (dot(s.functional, v.coords()) >= s.bound) return false;
    for (const auto& v : b.vertices)
        if (dot(s.functional, v.coords()) < s.bound) return false;
    return true;
}

const char* to_string(RaySign sign) { return sign == RaySign::nonnegative ? "nonnegative" : "nonpositive"; }

} // namespace pdc
