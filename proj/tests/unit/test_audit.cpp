#include <doctest.h>

#include "pdc/audit.hpp"

using pdc::CheckKind;

TEST_CASE("random instances follow the documented distribution") {
    auto rng = pdc::seeded_engine("distribution");
    for (int trial = 0; trial < 500; ++trial) {
        const auto h = pdc::random_instance(rng);
        CHECK(h.dimension() >= 1);
        CHECK(h.dimension() <= 3);
        CHECK(h.plus().size() <= 5);
        CHECK(h.minus().size() <= 5);
        auto in_range = [](const pdc::Rational& r) {
            const auto den = r.get_den();
            return (den == 1 || den == 2 || den == 4) && abs(r) <= 8;
        };
        for (const auto* list : {&h.plus(), &h.minus()})
            for (const auto& p : *list) {
                CHECK(in_range(p.constant));
                for (const auto& x : p.gradient) CHECK(in_range(x));
            }
    }
}

TEST_CASE("engine depends only on the label") {
    auto a = pdc::seeded_engine("x");
    auto b = pdc::seeded_engine("x");
    auto c = pdc::seeded_engine("y");
    const auto first = a();
    CHECK(first == b());
    CHECK(first != c());
}

TEST_CASE("small audit is clean and reproducible") {
    const auto s = pdc::run_audit(40, "unit");
    REQUIRE(s.rows.size() == 40);
    CHECK(s.clean());
    CHECK(s.disagreements() == 0);
    CHECK(s.errors() == 0);
    for (std::size_t k = 0; k < s.rows.size(); ++k) CHECK(s.rows[k].index == k);

    const auto again = pdc::run_audit(40, "unit");
    for (std::size_t k = 0; k < s.rows.size(); ++k) {
        CHECK(again.rows[k].instance->function() == s.rows[k].instance->function());
        CHECK(again.rows[k].holds == s.rows[k].holds);
    }
    // the checks are not trivially constant over the sample
    CHECK(s.holding(CheckKind::bounded_below) > 0);
    CHECK(s.holding(CheckKind::bounded_below) < 40);
}

TEST_CASE("audit without the oracle") {
    pdc::AuditOptions o;
    o.oracle = false;
    const auto s = pdc::run_audit(10, "no-oracle", o);
    CHECK(s.clean());
}
