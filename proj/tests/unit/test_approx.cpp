#include <doctest.h>

#include "pdc/approx.hpp"
#include "pdc/audit.hpp"
#include "pdc/error.hpp"
#include "support/fixtures.hpp"

using namespace fixtures;
using pdc::Vec;

namespace {

pdc::Codifferential cd_of(const PolyhedralDC& h) { return pdc::to_codifferential(pdc::normalize(h)); }

} // namespace

TEST_CASE("codifferentials of the worked examples") {
    auto cd = cd_of(example1());
    CHECK(cd.lower == poly({pt(-4, {2}), pt(0, {0}), pt(-4, {-2})}));
    CHECK(cd.upper == poly({pt(1, {-1}), pt(0, {0}), pt(1, {1})}));

    cd = cd_of(example2_x1());
    CHECK(cd.lower == poly({pt(0, {2}), pt(0, {-2}), pt(0, {0})}));
    CHECK(cd.upper == poly({pt(1, {-1}), pt(1, {1}), pt(0, {0})}));

    cd = cd_of(example2_x2());
    CHECK(cd.lower == poly({pt(0, {0}), pt(-4, {-4}), pt(-1, {0})}));
    CHECK(cd.upper == poly({pt(0, {-1}), pt(2, {1}), pt(0, {0})}));

    cd = cd_of(zero_function());
    CHECK(cd.lower == poly({pt(0, {0})}));
    CHECK(cd.upper == poly({pt(0, {0})}));
}

TEST_CASE("upper coexhausters of the worked examples") {
    auto e = pdc::upper_coexhauster(cd_of(example1()));
    CHECK(e.kind == pdc::CoexhausterKind::upper);
    REQUIRE(e.members.size() == 3);
    CHECK(same_vertices(e.members[0], poly({pt(-3, {1}), pt(1, {-1}), pt(-3, {-3})})));
    CHECK(same_vertices(e.members[1], poly({pt(-4, {2}), pt(0, {0}), pt(-4, {-2})})));
    CHECK(same_vertices(e.members[2], poly({pt(-3, {3}), pt(1, {1}), pt(-3, {-1})})));

    e = pdc::upper_coexhauster(cd_of(example2_x1()));
    REQUIRE(e.members.size() == 3);
    CHECK(same_vertices(e.members[0], poly({pt(1, {1}), pt(1, {-3}), pt(1, {-1})})));
    CHECK(same_vertices(e.members[1], poly({pt(1, {3}), pt(1, {-1}), pt(1, {1})})));
    CHECK(same_vertices(e.members[2], poly({pt(0, {2}), pt(0, {-2}), pt(0, {0})})));

    e = pdc::upper_coexhauster(cd_of(zero_function()));
    REQUIRE(e.members.size() == 1);
    CHECK(e.members[0] == poly({pt(0, {0})}));
}

TEST_CASE("lower coexhausters") {
    auto e = pdc::lower_coexhauster(cd_of(example2_x2()));
    CHECK(e.kind == pdc::CoexhausterKind::lower);
    REQUIRE(e.members.size() == 3);
    CHECK(same_vertices(e.members[0], poly({pt(0, {-1}), pt(2, {1}), pt(0, {0})})));
    CHECK(same_vertices(e.members[1], poly({pt(-4, {-5}), pt(-2, {-3}), pt(-4, {-4})})));
    CHECK(same_vertices(e.members[2], poly({pt(-1, {-1}), pt(1, {1}), pt(-1, {0})})));

    // upper {(1,-1),(0,0),(1,1)} shifted by each of (-4,2), (0,0), (-4,-2), by hand
    e = pdc::lower_coexhauster(cd_of(example1()));
    REQUIRE(e.members.size() == 3);
    CHECK(same_vertices(e.members[0], poly({pt(-3, {1}), pt(-4, {2}), pt(-3, {3})})));
    CHECK(same_vertices(e.members[1], poly({pt(1, {-1}), pt(0, {0}), pt(1, {1})})));
    CHECK(same_vertices(e.members[2], poly({pt(-3, {-3}), pt(-4, {-2}), pt(-3, {-1})})));

    e = pdc::lower_coexhauster(cd_of(zero_function()));
    REQUIRE(e.members.size() == 1);
    CHECK(e.members[0] == poly({pt(0, {0})}));
}

TEST_CASE("evaluation of each representation") {
    const auto cd = cd_of(example1());
    const auto up = pdc::upper_coexhauster(cd);
    CHECK(pdc::eval_codifferential(cd, {0}) == 0);
    CHECK(pdc::eval_codifferential(cd, {3}) == 0);
    CHECK(pdc::eval_coexhauster(up, {0}) == 0);
    CHECK(up.members[0].max_form({0}) == 1);
    CHECK(up.members[1].max_form({0}) == 0);
    CHECK(up.members[2].max_form({0}) == 1);
    CHECK(pdc::eval_coexhauster(up, {3}) == 0);

    const auto zcd = cd_of(zero_function());
    for (long k = -8; k <= 8; ++k) {
        CHECK(pdc::eval_codifferential(zcd, {q(k, 2)}) == 0);
        CHECK(pdc::eval_coexhauster(pdc::upper_coexhauster(zcd), {q(k, 2)}) == 0);
        CHECK(pdc::eval_coexhauster(pdc::lower_coexhauster(zcd), {q(k, 2)}) == 0);
    }
    CHECK_THROWS_AS(pdc::eval_codifferential(cd, {1, 1}), pdc::DimensionMismatch);
    CHECK_THROWS_AS(pdc::eval_coexhauster(up, {}), pdc::DimensionMismatch);
}

TEST_CASE("property: representation identity, member counts, translation structure") {
    auto rng = pdc::seeded_engine("approx-properties");
    std::uniform_int_distribution<int> num(-12, 12);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = pdc::normalize(pdc::random_instance(rng));
        const auto& f = h.function();
        const std::size_t n = f.dimension();
        const auto cd = pdc::to_codifferential(h);
        const auto up = pdc::upper_coexhauster(cd);
        const auto lo = pdc::lower_coexhauster(cd);

        CHECK(up.members.size() == f.minus().size());
        CHECK(lo.members.size() == f.plus().size());
        for (std::size_t j = 0; j < up.members.size(); ++j) {
            REQUIRE(up.members[j].vertices.size() == cd.lower.vertices.size());
            for (std::size_t i = 0; i < cd.lower.vertices.size(); ++i)
                CHECK(up.members[j].vertices[i] - cd.upper.vertices[j] == cd.lower.vertices[i]);
        }
        for (std::size_t i = 0; i < lo.members.size(); ++i)
            for (std::size_t j = 0; j < cd.upper.vertices.size(); ++j)
                CHECK(lo.members[i].vertices[j] - cd.lower.vertices[i] == cd.upper.vertices[j]);

        const Vec origin = pdc::zeros(n);
        CHECK(pdc::eval_codifferential(cd, origin) == 0);
        CHECK(pdc::eval_coexhauster(up, origin) == 0);
        CHECK(pdc::eval_coexhauster(lo, origin) == 0);

        for (int s = 0; s < 20; ++s) {
            Vec d;
            for (std::size_t k = 0; k < n; ++k) d.push_back(q(num(rng), 4));
            const Rational v = pdc::eval(f, d);
            CHECK(pdc::eval_codifferential(cd, d) == v);
            CHECK(pdc::eval_coexhauster(up, d) == v);
            CHECK(pdc::eval_coexhauster(lo, d) == v);
        }
    }
}
