#pragma once

// Randomized cross-check of all checkers: route agreement, witness
// validity, oracle soundness and the implications min => bounded below,
// max => bounded above.

#include "pdc/conditions.hpp"
#include "pdc/dcfunc.hpp"
#include "pdc/oracle.hpp"

#include <array>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace pdc {

/// n in {1,2,3}; |I|, |J| in [1,5]; entries p/q with p in [-8,8], q in {1,2,4}.
PolyhedralDC random_instance(std::mt19937_64& rng);

/// Engine seeded from a text label (FNV-1a of the label).
std::mt19937_64 seeded_engine(std::string_view label);

struct AuditOptions {
    bool oracle = true;
    Rational grid_radius = 5;
    Rational grid_step = Rational(1, 4);
    std::size_t recession_samples = 64;
};

struct InstanceAudit {
    std::size_t index = 0;
    std::optional<NormalizedDC> instance;
    AuditRow routes;
    std::array<bool, 4> holds{};          // consensus verdict per check
    std::array<bool, 4> witness_ok{true, true, true, true};
    std::array<bool, 4> oracle_ok{true, true, true, true};  // no sound-direction contradiction
    bool implications_ok = true;
    std::string error;                    // internal failure, e.g. RouteDisagreement

    bool ok() const;
};

struct AuditSummary {
    std::vector<InstanceAudit> rows;

    std::size_t disagreements() const;
    std::size_t witness_failures() const;
    std::size_t oracle_contradictions() const;
    std::size_t implication_violations() const;
    std::size_t errors() const;
    std::size_t holding(CheckKind kind) const;
    bool clean() const;
};

InstanceAudit audit_instance(const NormalizedDC& h, const AuditOptions& options);

/// Generates count instances from the label's engine and audits them in
/// parallel; rows are in generation order.
AuditSummary run_audit(std::size_t count, std::string_view seed_label, const AuditOptions& options = {});

} // namespace pdc
