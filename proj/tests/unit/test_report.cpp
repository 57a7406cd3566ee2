#include <doctest.h>

#include "pdc/report.hpp"
#include "support/fixtures.hpp"

using namespace fixtures;

TEST_CASE("machine and human forms") {
    pdc::Report r;
    r.add("check.min.holds", true);
    r.add("check.min.route.dc", "holds");
    r.add("offset", std::string("0"));
    CHECK(r.machine() == "check.min.holds = true\ncheck.min.route.dc = holds\noffset = 0\n");
    CHECK(r.value("offset") == "0");
    CHECK(r.value("missing").empty());
    const std::string human = r.human();
    CHECK(human.find("check") != std::string::npos);
    CHECK(human.find("holds") != std::string::npos);
}

TEST_CASE("formatters") {
    CHECK(pdc::format_point(pt(-3, {1})) == "(-3, 1)");
    CHECK(pdc::format_polytope(poly({pt(-3, {1}), pt(1, {-1})})) == "co{(-3, 1), (1, -1)}");
}

TEST_CASE("verdict keys") {
    const auto h = pdc::normalize(example2_x2());
    pdc::Report r;
    pdc::add_verdict(r, pdc::max_condition(h), h);
    CHECK(r.value("check.max.holds") == "false");
    CHECK(r.value("check.max.routes_agree") == "true");
    CHECK(r.value("check.max.failing_element") == "2");
    CHECK_FALSE(r.value("check.max.witness").empty());

    pdc::Report s;
    pdc::add_stationarity(s, pdc::stationarity_report(h));
    CHECK(s.value("stationarity.classification") == "inconclusive");
}

TEST_CASE("coexhauster keys") {
    const auto cd = pdc::to_codifferential(pdc::normalize(example1()));
    pdc::Report r;
    pdc::add_coexhauster(r, pdc::upper_coexhauster(cd));
    CHECK(r.value("coexhauster.upper.count") == "3");
    CHECK(r.value("coexhauster.upper.member.1") == "co{(-3, 1), (1, -1), (-3, -3)}");
}
