#include "pdc/oracle.hpp"

#include "pdc/error.hpp"

#include <array>
#include <cstdlib>
#include <string>

namespace pdc {

std::size_t point_budget() {
    if (const char* env = std::getenv("PDC_POINT_BUDGET")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return default_point_budget;
}

namespace {

GridExtremum extremum(const PolyhedralDC& h, const GridSpec& g, Extremum sense, std::size_t budget) {
    if (auto fast = parallel::grid_extremum(h, g, sense, budget)) return *fast;
    return reference::grid_extremum(h, g, sense, budget);
}

constexpr std::array<unsigned, 12> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Van der Corput radical inverse of index in the given base.
Rational van_der_corput(std::uint64_t index, unsigned base) {
    Rational r = 0;
    Rational weight(1, base);
    while (index > 0) {
        r += weight * static_cast<unsigned long>(index % base);
        weight /= base;
        index /= base;
    }
    return r;
}

} // namespace

GridExtremum grid_min(const PolyhedralDC& h, const GridSpec& g, std::size_t budget) {
    return extremum(h, g, Extremum::min, budget);
}

GridExtremum grid_max(const PolyhedralDC& h, const GridSpec& g, std::size_t budget) {
    return extremum(h, g, Extremum::max, budget);
}

std::uint64_t instance_hash(const PolyhedralDC& h) {
    std::uint64_t hash = 1469598103934665603ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            hash ^= c;
            hash *= 1099511628211ULL;
        }
        hash ^= 0xff;
        hash *= 1099511628211ULL;
    };
    feed(std::to_string(h.dimension()));
    for (const auto* list : {&h.plus(), &h.minus()}) {
        feed("|");
        for (const auto& p : *list) {
            feed(to_string(p.constant));
            for (const auto& v : p.gradient) feed(to_string(v));
        }
    }
    return hash;
}

std::vector<Vec> recession_directions(const PolyhedralDC& h, std::size_t count) {
    const std::size_t n = h.dimension();
    std::vector<Vec> dirs;
    auto push = [&](Vec d) {
        if (dirs.size() < count) dirs.push_back(std::move(d));
    };
    for (std::size_t k = 0; k < n; ++k) {
        Vec e = zeros(n);
        e[k] = 1;
        push(e);
        e[k] = -1;
        push(e);
    }
    if (n == 1 || n > primes.size()) return dirs;

    std::uint64_t index = 1 + instance_hash(h) % 4096;
    while (dirs.size() < count) {
        Vec d(n);
        bool nonzero = false;
        for (std::size_t k = 0; k < n; ++k) {
            d[k] = 2 * van_der_corput(index, primes[k]) - 1;
            nonzero = nonzero || d[k] != 0;
        }
        ++index;
        if (nonzero) push(std::move(d));
    }
    return dirs;
}

std::optional<Vec> sample_recession(const PolyhedralDC& h, std::size_t count, RecessionSign target) {
    for (auto& d : recession_directions(h, count)) {
        const Rational r = recession(h, d);
        if (target == RecessionSign::negative ? r < 0 : r > 0) return d;
    }
    return std::nullopt;
}

} // namespace pdc
