#include "pdc/report.hpp"

#include <sstream>

namespace pdc {

namespace {

std::vector<std::string> split(const std::string& key) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto dot = key.find('.', start);
        parts.push_back(key.substr(start, dot == std::string::npos ? std::string::npos : dot - start));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return parts;
}

std::string format_vector(const Vec& v) { return to_string(v); }

std::string piece_text(const char* ck, const char* gk, const AffinePiece& p) {
    return std::string(ck) + "=" + to_string(p.constant) + " " + gk + "=" + to_string(p.gradient);
}

} // namespace

void Report::add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }

std::string Report::value(const std::string& key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return v;
    return {};
}

std::string Report::machine() const {
    std::string out;
    for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
    return out;
}

std::string Report::human() const {
    std::string out;
    std::vector<std::string> previous;
    for (const auto& [k, v] : entries_) {
        const auto parts = split(k);
        std::size_t common = 0;
        while (common + 1 < parts.size() && common < previous.size() && parts[common] == previous[common])
            ++common;
        for (std::size_t d = common; d + 1 < parts.size(); ++d)
            out += std::string(2 * d, ' ') + parts[d] + ":\n";
        out += std::string(2 * (parts.size() - 1), ' ') + parts.back() + ": " + v + "\n";
        previous = parts;
    }
    return out;
}

std::string format_point(const LiftedPoint& p) { return to_string(p.coords()); }

std::string format_polytope(const Polytope& p) {
    std::string s = "co{";
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) s += ", ";
        s += format_point(p.vertices[i]);
    }
    return s + "}";
}

std::string format_certificate(const Certificate& c) {
    std::ostringstream out;
    if (c.feasible) {
        out << "feasible";
        for (std::size_t b = 0; b < c.multipliers.size(); ++b)
            out << (b == 0 ? " lambda=" : " mu=") << format_vector(c.multipliers[b]);
    } else {
        out << "infeasible";
        if (c.separator)
            out << " functional=" << format_vector(c.separator->functional)
                << " bound=" << to_string(c.separator->bound);
    }
    return out.str();
}

void add_instance(Report& r, const Instance& instance, const NormalizedDC& h) {
    const auto& f = instance.function;
    r.add("instance.label", instance.label.value_or(""));
    r.add("instance.dimension", std::to_string(f.dimension()));
    for (std::size_t i = 0; i < f.plus().size(); ++i)
        r.add("instance.plus." + std::to_string(i + 1), piece_text("a", "v", f.plus()[i]));
    for (std::size_t j = 0; j < f.minus().size(); ++j)
        r.add("instance.minus." + std::to_string(j + 1), piece_text("b", "w", f.minus()[j]));
    r.add("normalization.offset", to_string(h.offset()));
}

void add_verdict(Report& r, const Verdict& v, const NormalizedDC& h) {
    const std::string base = std::string("check.") + to_string(v.check);
    r.add(base + ".holds", v.holds);
    for (const auto& route : v.routes) {
        const std::string rk = base + ".route." + to_string(route.route);
        r.add(rk, route.holds ? "holds" : "fails");
        for (std::size_t k = 0; k < route.elements.size(); ++k)
            r.add(rk + ".element." + std::to_string(k + 1), format_certificate(route.elements[k]));
    }
    bool agree = true;
    for (const auto& route : v.routes) agree = agree && route.holds == v.holds;
    r.add(base + ".routes_agree", agree);
    if (v.failing_element) r.add(base + ".failing_element", std::to_string(*v.failing_element + 1));
    r.add(base + ".witness.kind", to_string(v.witness_kind));
    if (v.witness) {
        r.add(base + ".witness", to_string(*v.witness));
        if (v.witness_kind == WitnessKind::direction)
            r.add(base + ".witness.recession", to_string(recession(h.function(), *v.witness)));
        else
            r.add(base + ".witness.value", to_string(eval(h.function(), *v.witness)));
    }
}

void add_stationarity(Report& r, const StationarityReport& s) {
    r.add("stationarity.min_condition", s.min.holds);
    r.add("stationarity.max_condition", s.max.holds);
    r.add("stationarity.classification", to_string(s.classification));
    r.add("stationarity.note", s.note);
}

void add_codifferential(Report& r, const Codifferential& cd) {
    r.add("codifferential.lower", format_polytope(cd.lower));
    r.add("codifferential.upper", format_polytope(cd.upper));
}

void add_coexhauster(Report& r, const Coexhauster& e) {
    const std::string base = std::string("coexhauster.") + to_string(e.kind);
    r.add(base + ".count", std::to_string(e.members.size()));
    for (std::size_t k = 0; k < e.members.size(); ++k)
        r.add(base + ".member." + std::to_string(k + 1), format_polytope(e.members[k]));
}

void add_oracle(Report& r, const Verdict& v, const NormalizedDC& h, const GridSpec& grid,
                std::size_t recession_samples) {
    const auto& f = h.function();
    const std::string base = std::string("oracle.") + to_string(v.check);
    bool consistent = true;
    switch (v.check) {
    case CheckKind::min:
    case CheckKind::max: {
        const bool lower = v.check == CheckKind::min;
        const auto ext = lower ? grid_min(f, grid) : grid_max(f, grid);
        r.add(base + ".grid", "radius=" + to_string(grid.radius) + " step=" + to_string(grid.step));
        r.add(base + (lower ? ".grid_min.value" : ".grid_max.value"), to_string(ext.value));
        r.add(base + (lower ? ".grid_min.argument" : ".grid_max.argument"), to_string(ext.argument));
        if (v.holds) consistent = lower ? ext.value >= 0 : ext.value <= 0;
        break;
    }
    case CheckKind::bounded_below:
    case CheckKind::bounded_above: {
        const auto target = v.check == CheckKind::bounded_below ? RecessionSign::negative : RecessionSign::positive;
        const auto found = sample_recession(f, recession_samples, target);
        r.add(base + ".recession.samples", std::to_string(recession_samples));
        r.add(base + ".recession.violation", found ? to_string(*found) : "none");
        if (v.holds) consistent = !found;
        break;
    }
    }
    r.add(base + ".consistent", consistent);
}

} // namespace pdc
