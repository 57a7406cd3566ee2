#include "pdc/audit.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

namespace pdc {

PolyhedralDC random_instance(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(1, 3), count(1, 5), num(-8, 8), den_pick(0, 2);
    auto entry = [&] {
        const int den = 1 << den_pick(rng);
        return make_rational(num(rng), den);
    };
    const std::size_t n = dim(rng);
    auto pieces = [&] {
        std::vector<AffinePiece> out(count(rng));
        for (auto& p : out) {
            p.constant = entry();
            for (std::size_t k = 0; k < n; ++k) p.gradient.push_back(entry());
        }
        return out;
    };
    auto plus = pieces();
    auto minus = pieces();
    return PolyhedralDC::make(n, std::move(plus), std::move(minus));
}

std::mt19937_64 seeded_engine(std::string_view label) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : label) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(hash), static_cast<std::uint32_t>(hash >> 32)};
    return std::mt19937_64(seq);
}

bool InstanceAudit::ok() const {
    auto all = [](const std::array<bool, 4>& a) { return std::all_of(a.begin(), a.end(), [](bool b) { return b; }); };
    return error.empty() && routes.consistent() && all(witness_ok) && all(oracle_ok) && implications_ok;
}

InstanceAudit audit_instance(const NormalizedDC& h, const AuditOptions& options) {
    InstanceAudit a;
    a.instance = h;
    const auto& f = h.function();
    try {
        a.routes = equivalence_audit(h);
        for (auto kind : all_checks) {
            const auto k = static_cast<std::size_t>(kind);
            const auto v = run_check(h, kind);
            a.holds[k] = v.holds;
            if (v.holds) {
                a.witness_ok[k] = !v.witness.has_value();
                continue;
            }
            if (!v.witness) {
                a.witness_ok[k] = false;
                continue;
            }
            switch (kind) {
            case CheckKind::bounded_below: a.witness_ok[k] = recession(f, *v.witness) < 0; break;
            case CheckKind::bounded_above: a.witness_ok[k] = recession(f, *v.witness) > 0; break;
            case CheckKind::min: a.witness_ok[k] = eval(f, *v.witness) < 0; break;
            case CheckKind::max: a.witness_ok[k] = eval(f, *v.witness) > 0; break;
            }
        }
        const auto bb = static_cast<std::size_t>(CheckKind::bounded_below);
        const auto ba = static_cast<std::size_t>(CheckKind::bounded_above);
        const auto mn = static_cast<std::size_t>(CheckKind::min);
        const auto mx = static_cast<std::size_t>(CheckKind::max);
        a.implications_ok = (!a.holds[mn] || a.holds[bb]) && (!a.holds[mx] || a.holds[ba]);

        if (options.oracle) {
            const GridSpec grid{options.grid_radius, options.grid_step, f.dimension()};
            if (a.holds[mn]) a.oracle_ok[mn] = grid_min(f, grid).value >= 0;
            if (a.holds[mx]) a.oracle_ok[mx] = grid_max(f, grid).value <= 0;
            if (a.holds[bb])
                a.oracle_ok[bb] = !sample_recession(f, options.recession_samples, RecessionSign::negative);
            if (a.holds[ba])
                a.oracle_ok[ba] = !sample_recession(f, options.recession_samples, RecessionSign::positive);
        }
    } catch (const std::exception& e) {
        a.error = e.what();
    }
    return a;
}

AuditSummary run_audit(std::size_t count, std::string_view seed_label, const AuditOptions& options) {
    auto rng = seeded_engine(seed_label);
    std::vector<NormalizedDC> instances;
    instances.reserve(count);
    for (std::size_t i = 0; i < count; ++i) instances.push_back(normalize(random_instance(rng)));

    AuditSummary summary;
    summary.rows.resize(count);
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        auto row = audit_instance(instances[i], options);
        row.index = static_cast<std::size_t>(i);
        summary.rows[i] = std::move(row);
    }
    return summary;
}

std::size_t AuditSummary::disagreements() const {
    return std::count_if(rows.begin(), rows.end(), [](const InstanceAudit& r) { return !r.routes.consistent(); });
}

std::size_t AuditSummary::witness_failures() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += std::count(r.witness_ok.begin(), r.witness_ok.end(), false);
    return n;
}

std::size_t AuditSummary::oracle_contradictions() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += std::count(r.oracle_ok.begin(), r.oracle_ok.end(), false);
    return n;
}

std::size_t AuditSummary::implication_violations() const {
    return std::count_if(rows.begin(), rows.end(), [](const InstanceAudit& r) { return !r.implications_ok; });
}

std::size_t AuditSummary::errors() const {
    return std::count_if(rows.begin(), rows.end(), [](const InstanceAudit& r) { return !r.error.empty(); });
}

std::size_t AuditSummary::holding(CheckKind kind) const {
    const auto k = static_cast<std::size_t>(kind);
    return std::count_if(rows.begin(), rows.end(), [&](const InstanceAudit& r) { return r.holds[k]; });
}

bool AuditSummary::clean() const {
    return std::all_of(rows.begin(), rows.end(), [](const InstanceAudit& r) { return r.ok(); });
}

} // namespace pdc
