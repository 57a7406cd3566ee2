#include <doctest.h>

#include "pdc/dcfunc.hpp"
#include "pdc/error.hpp"
#include "support/fixtures.hpp"

#include <random>

using namespace fixtures;
using pdc::Vec;

namespace {

Rational random_rational(std::mt19937_64& rng, int range = 8) {
    std::uniform_int_distribution<int> num(-range, range);
    static const int dens[] = {1, 2, 4};
    std::uniform_int_distribution<int> den(0, 2);
    return q(num(rng), dens[den(rng)]);
}

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
    Vec v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(random_rational(rng));
    return v;
}

PolyhedralDC random_function(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(1, 3), count(1, 5);
    const std::size_t n = dim(rng);
    auto pieces = [&] {
        std::vector<AffinePiece> out(count(rng));
        for (auto& p : out) p = AffinePiece{random_rational(rng), random_vec(rng, n)};
        return out;
    };
    auto plus = pieces();
    auto minus = pieces();
    return PolyhedralDC::make(n, plus, minus);
}

} // namespace

TEST_CASE("make validates") {
    CHECK(example1().plus().size() == 3);
    CHECK(zero_function().dimension() == 1);
    CHECK_THROWS_AS(PolyhedralDC::make(2, {piece(0, {1, 0})}, {piece(0, {1})}), pdc::DimensionMismatch);
    CHECK_THROWS_AS(PolyhedralDC::make(1, {}, {piece(0, {1})}), pdc::EmptyPieceList);
    CHECK_THROWS_AS(PolyhedralDC::make(1, {piece(0, {1})}, {}), pdc::EmptyPieceList);
    CHECK_THROWS_AS(PolyhedralDC::make(0, {piece(0, {})}, {piece(0, {})}), pdc::Error);
}

TEST_CASE("eval") {
    const auto h = example1();
    CHECK(pdc::eval(h, {0}) == 0);
    CHECK(pdc::eval(h, {3}) == 0);
    CHECK(pdc::eval(h, {q(3, 2)}) == q(-1, 2));
    CHECK(pdc::eval(h, {2}) == -1);
    CHECK(pdc::eval(h, {-2}) == -1);
    for (long k = -20; k <= 20; ++k) CHECK(pdc::eval(zero_function(), {q(k, 4)}) == 0);
    CHECK_THROWS_AS(pdc::eval(h, {1, 2}), pdc::DimensionMismatch);
}

TEST_CASE("recession") {
    CHECK(pdc::recession(example1(), {1}) == 1);
    CHECK(pdc::recession(example1(), {-1}) == 1);
    CHECK(pdc::recession(example1(), {0}) == 0);
    CHECK(pdc::recession(negative_abs(), {1}) == -1);
    CHECK_THROWS_AS(pdc::recession(example1(), {}), pdc::DimensionMismatch);
}

TEST_CASE("active sets") {
    auto a = pdc::active_sets(example1(), {0});
    CHECK(a.plus == std::vector<std::size_t>{1});
    CHECK(a.minus == std::vector<std::size_t>{1});
    a = pdc::active_sets(example1(), {3});
    CHECK(a.plus == std::vector<std::size_t>{0});
    CHECK(a.minus == std::vector<std::size_t>{0});
    a = pdc::active_sets(zero_function(), {q(7, 2)});
    CHECK(a.plus == std::vector<std::size_t>{0});
    CHECK(a.minus == std::vector<std::size_t>{0});
    // both |d| pieces tie at the origin
    a = pdc::active_sets(negative_abs(), {0});
    CHECK(a.minus == std::vector<std::size_t>{0, 1});
}

TEST_CASE("directional derivative") {
    CHECK(pdc::directional_derivative(example1(), {0}, {1}) == 0);
    CHECK(pdc::directional_derivative(negative_abs(), {0}, {1}) == -1);
    CHECK(pdc::directional_derivative(negative_abs(), {0}, {-1}) == -1);
    CHECK(pdc::directional_derivative(example1(), {3}, {1}) == 1);
    CHECK_THROWS_AS(pdc::directional_derivative(example1(), {0}, {1, 1}), pdc::DimensionMismatch);
}

TEST_CASE("normalize") {
    const auto n1 = pdc::normalize(example1());
    CHECK(n1.offset() == 0);
    CHECK(n1.function() == example1());

    const auto h = PolyhedralDC::make(1, {piece(3, {1})}, {piece(1, {0})});
    const auto n = pdc::normalize(h);
    CHECK(n.offset() == 2);
    CHECK(n.function() == PolyhedralDC::make(1, {piece(0, {1})}, {piece(0, {0})}));

    CHECK(pdc::normalize(zero_function()).function() == zero_function());
    CHECK_THROWS_AS(pdc::NormalizedDC::assume_normalized(h), pdc::NotNormalized);
    CHECK_NOTHROW(pdc::NormalizedDC::assume_normalized(example1()));
}

TEST_CASE("property: normalization identity and zero at zero") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = random_function(rng);
        const auto n = pdc::normalize(h);
        CHECK(pdc::eval(n.function(), pdc::zeros(h.dimension())) == 0);
        CHECK(n.offset() == pdc::eval(h, pdc::zeros(h.dimension())));
        for (int s = 0; s < 10; ++s) {
            const Vec d = random_vec(rng, h.dimension());
            CHECK(pdc::eval(n.function(), d) + n.offset() == pdc::eval(h, d));
        }
    }
}

TEST_CASE("property: derivative matches difference quotients") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = random_function(rng);
        // integer points hit ties between pieces often, which is the hard case
        Vec x;
        std::uniform_int_distribution<int> coord(-2, 2);
        for (std::size_t k = 0; k < h.dimension(); ++k) x.push_back(coord(rng));
        const Vec d = random_vec(rng, h.dimension());
        INFO("trial ", trial, " x=", pdc::to_string(x), " d=", pdc::to_string(d));
        CHECK(pdc::directional_derivative(h, x, d) == difference_quotient(h, x, d));
    }
}

TEST_CASE("property: positive homogeneity") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = random_function(rng);
        const Vec x = random_vec(rng, h.dimension());
        const Vec d = random_vec(rng, h.dimension());
        const Rational t = q(std::uniform_int_distribution<int>(0, 12)(rng), 4);
        CHECK(pdc::recession(h, pdc::scaled(d, t)) == t * pdc::recession(h, d));
        CHECK(pdc::directional_derivative(h, x, pdc::scaled(d, t)) == t * pdc::directional_derivative(h, x, d));
    }
}
