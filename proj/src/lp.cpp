#include "pdc/lp.hpp"

#include "pdc/error.hpp"

namespace pdc::lp {

namespace {

class Tableau {
public:
    explicit Tableau(const Problem& p) : nv_(p.num_vars), m_(p.rows.size()) {
        for (const auto& row : p.rows)
            if (row.rel != Relation::eq) ++ns_;
        cols_ = nv_ + ns_ + m_;
        t_.assign(m_, Vec(cols_ + 1, Rational(0)));
        sign_.assign(m_, 1);
        basis_.resize(m_);
        active_.assign(m_, true);

        std::size_t slack = nv_;
        for (std::size_t r = 0; r < m_; ++r) {
            const auto& row = p.rows[r];
            for (std::size_t j = 0; j < nv_; ++j) t_[r][j] = row.coeffs[j];
            if (row.rel == Relation::le) t_[r][slack++] = 1;
            if (row.rel == Relation::ge) t_[r][slack++] = -1;
            t_[r][cols_] = row.rhs;
            if (row.rhs < 0) {
                sign_[r] = -1;
                for (auto& v : t_[r]) v = -v;
            }
            t_[r][artificial(r)] = 1;
            basis_[r] = artificial(r);
        }
    }

    /// Phase one; returns the sum of artificials at optimum.
    Rational phase_one() {
        z_.assign(cols_ + 1, Rational(0));
        for (std::size_t r = 0; r < m_; ++r) {
            for (std::size_t j = 0; j < cols_ + 1; ++j)
                if (!is_artificial(j)) z_[j] -= t_[r][j];
        }
        run(/*allow_artificial=*/true);
        return -z_[cols_];
    }

    /// Phase-one dual mapped back to the caller's rows.
    Vec farkas() const {
        Vec y(m_);
        for (std::size_t r = 0; r < m_; ++r) y[r] = (1 - z_[artificial(r)]) * sign_[r];
        return y;
    }

    void drive_out_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (!is_artificial(basis_[r])) continue;
            std::size_t j = 0;
            while (j < nv_ + ns_ && t_[r][j] == 0) ++j;
            if (j < nv_ + ns_)
                pivot(r, j);
            else
                active_[r] = false;  // redundant row
        }
    }

    /// Phase two; false when unbounded.
    bool phase_two(const Vec& cost) {
        z_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < nv_; ++j) z_[j] = cost[j];
        for (std::size_t r = 0; r < m_; ++r) {
            if (!active_[r] || basis_[r] >= nv_) continue;
            const Rational cb = cost[basis_[r]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols_ + 1; ++j) z_[j] -= cb * t_[r][j];
        }
        return run(/*allow_artificial=*/false);
    }

    Vec primal() const {
        Vec x(nv_, Rational(0));
        for (std::size_t r = 0; r < m_; ++r)
            if (active_[r] && basis_[r] < nv_) x[basis_[r]] = t_[r][cols_];
        return x;
    }

private:
    std::size_t artificial(std::size_t r) const { return nv_ + ns_ + r; }
    bool is_artificial(std::size_t j) const { return j >= nv_ + ns_ && j < cols_; }

    // Bland's rule: lowest-index entering column, lowest-index basic variable
    // among tied ratios. Returns false on an unbounded ray.
    bool run(bool allow_artificial) {
        while (true) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allow_artificial && is_artificial(j)) continue;
                if (z_[j] < 0) { enter = j; break; }
            }
            if (enter == cols_) return true;

            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t r = 0; r < m_; ++r) {
                if (!active_[r] || t_[r][enter] <= 0) continue;
                Rational ratio = t_[r][cols_] / t_[r][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = 1 / t_[r][c];
        for (auto& v : t_[r]) v *= inv;
        auto eliminate = [&](Vec& row) {
            if (row[c] == 0) return;
            const Rational f = row[c];
            for (std::size_t j = 0; j < cols_ + 1; ++j)
                if (t_[r][j] != 0) row[j] -= f * t_[r][j];
        };
        for (std::size_t i = 0; i < m_; ++i)
            if (i != r) eliminate(t_[i]);
        eliminate(z_);
        basis_[r] = c;
    }

    std::size_t nv_;
    std::size_t m_;
    std::size_t ns_ = 0;
    std::size_t cols_ = 0;
    std::vector<Vec> t_;
    Vec z_;
    std::vector<int> sign_;
    std::vector<std::size_t> basis_;
    std::vector<bool> active_;
};

void validate(const Problem& p) {
    for (const auto& row : p.rows)
        if (row.coeffs.size() != p.num_vars)
            throw MalformedProblem("lp row has " + std::to_string(row.coeffs.size()) +
                                   " coefficients for " + std::to_string(p.num_vars) + " variables");
    if (p.minimize && p.minimize->size() != p.num_vars)
        throw MalformedProblem("lp objective width does not match variable count");
}

} // namespace

bool satisfies(const Problem& problem, const Vec& x) {
    if (x.size() != problem.num_vars) return false;
    for (const auto& v : x)
        if (v < 0) return false;
    for (const auto& row : problem.rows) {
        const Rational lhs = dot(row.coeffs, x);
        switch (row.rel) {
        case Relation::eq: if (lhs != row.rhs) return false; break;
        case Relation::ge: if (lhs < row.rhs) return false; break;
        case Relation::le: if (lhs > row.rhs) return false; break;
        }
    }
    return true;
}

bool is_farkas_certificate(const Problem& problem, const Vec& y) {
    if (y.size() != problem.rows.size()) return false;
    Rational value = 0;
    for (std::size_t r = 0; r < y.size(); ++r) {
        const auto rel = problem.rows[r].rel;
        if (rel == Relation::ge && y[r] < 0) return false;
        if (rel == Relation::le && y[r] > 0) return false;
        value += y[r] * problem.rows[r].rhs;
    }
    if (value <= 0) return false;
    for (std::size_t j = 0; j < problem.num_vars; ++j) {
        Rational col = 0;
        for (std::size_t r = 0; r < y.size(); ++r) col += y[r] * problem.rows[r].coeffs[j];
        if (col > 0) return false;
    }
    return true;
}

Solution solve(const Problem& problem) {
    validate(problem);
    Tableau tab(problem);
    Solution out;

    if (tab.phase_one() > 0) {
        out.status = Status::infeasible;
        out.farkas = tab.farkas();
        if (!is_farkas_certificate(problem, out.farkas))
            throw CertificateError("simplex produced an invalid Farkas certificate");
        return out;
    }

    tab.drive_out_artificials();
    if (problem.minimize && !tab.phase_two(*problem.minimize)) {
        out.status = Status::unbounded;
        return out;
    }

    out.status = Status::feasible;
    out.x = tab.primal();
    if (!satisfies(problem, out.x))
        throw CertificateError("simplex produced a point violating the constraints");
    if (problem.minimize) out.objective = dot(*problem.minimize, out.x);
    return out;
}

} // namespace pdc::lp
