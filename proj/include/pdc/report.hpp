#pragma once

// Ordered key-value reports. The machine form is "key = value" per line;
// the human form is the same entries rendered as an indented tree.

#include "pdc/approx.hpp"
#include "pdc/conditions.hpp"
#include "pdc/instance_io.hpp"
#include "pdc/oracle.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pdc {

class Report {
public:
    void add(std::string key, std::string value);
    void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
    void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }

    const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }
    /// Value of the first entry with this key, or empty.
    std::string value(const std::string& key) const;

    std::string machine() const;
    std::string human() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

std::string format_point(const LiftedPoint& p);
std::string format_polytope(const Polytope& p);
std::string format_certificate(const Certificate& c);

void add_instance(Report& r, const Instance& instance, const NormalizedDC& h);
void add_verdict(Report& r, const Verdict& v, const NormalizedDC& h);
void add_stationarity(Report& r, const StationarityReport& s);
void add_codifferential(Report& r, const Codifferential& cd);
void add_coexhauster(Report& r, const Coexhauster& e);

/// Grid extrema and recession sampling; "oracle.<check>.consistent" is false
/// when the oracle refutes a condition the verdict says holds.
void add_oracle(Report& r, const Verdict& v, const NormalizedDC& h, const GridSpec& grid,
                std::size_t recession_samples);

} // namespace pdc
