#include <doctest.h>

#include "pdc/audit.hpp"
#include "pdc/instance_io.hpp"
#include "support/fixtures.hpp"

#include <string>

using namespace fixtures;
using pdc::ParseError;

namespace {

const char* const example1_text = R"({
  "label": "worked example",
  "dimension": 1,
  "plus": [{"a": "-4", "v": ["2"]}, {"a": "0", "v": ["0"]}, {"a": "-4", "v": ["-2"]}],
  "minus": [{"b": "-1", "w": ["1"]}, {"b": "0", "w": ["0"]}, {"b": "-1", "w": ["-1"]}]
})";

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
    try {
        pdc::parse_instance(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

} // namespace

TEST_CASE("parse a well-formed instance") {
    const auto inst = pdc::parse_instance(example1_text);
    CHECK(inst.label == std::string("worked example"));
    CHECK(inst.function == example1());

    const auto dec = pdc::parse_instance(
        R"({"dimension": 1, "plus": [{"a": "0.25", "v": ["3/2"]}], "minus": [{"b": "0", "w": ["0"]}]})");
    CHECK(dec.function.plus()[0].constant == q(1, 4));
    CHECK(dec.function.plus()[0].gradient[0] == q(3, 2));
    CHECK_FALSE(dec.label.has_value());
}

TEST_CASE("syntax errors carry line and column") {
    // missing comma after the dimension value; the position is the last
    // character of the unexpected token "plus"
    const std::string text = "{\n  \"dimension\": 1\n  \"plus\": []\n}";
    const auto [line, column] = error_position(text);
    CHECK(line == 3);
    CHECK(column == 8);
    CHECK_THROWS_AS(pdc::parse_instance("{"), ParseError);
}

TEST_CASE("semantic errors point at the offending value") {
    const std::string bad_rational = "{\n  \"dimension\": 1,\n  \"plus\": [{\"a\": \"x\", \"v\": [\"1\"]}],\n"
                                     "  \"minus\": [{\"b\": \"0\", \"w\": [\"0\"]}]\n}";
    CHECK(error_position(bad_rational) == std::pair<std::size_t, std::size_t>{3, 18});

    const std::string unknown = "{\n  \"dimension\": 1,\n  \"extra\": 5,\n  \"plus\": [{\"a\": \"0\", \"v\": [\"1\"]}],\n"
                                "  \"minus\": [{\"b\": \"0\", \"w\": [\"0\"]}]\n}";
    CHECK(error_position(unknown).first == 3);

    const std::string wrong_length = "{\n  \"dimension\": 2,\n  \"plus\": [{\"a\": \"0\", \"v\": [\"1\", \"0\"]}],\n"
                                     "  \"minus\": [{\"b\": \"0\", \"w\": [\"0\"]}]\n}";
    CHECK(error_position(wrong_length).first == 4);

    const std::string numeric = R"({"dimension": 1, "plus": [{"a": 1, "v": ["1"]}], "minus": [{"b": "0", "w": ["0"]}]})";
    CHECK(error_position(numeric) == std::pair<std::size_t, std::size_t>{1, 33});

    CHECK_THROWS_AS(pdc::parse_instance(R"({"dimension": 1, "plus": [], "minus": [{"b": "0", "w": ["0"]}]})"),
                    ParseError);
    CHECK_THROWS_AS(pdc::parse_instance(R"({"dimension": 0, "plus": [{"a": "0", "v": []}], "minus": [{"b": "0", "w": []}]})"),
                    ParseError);
    CHECK_THROWS_AS(pdc::parse_instance("[]"), ParseError);
}

TEST_CASE("missing files") {
    try {
        pdc::load_instance("/nonexistent/instance.json");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 0);
        CHECK(e.column() == 0);
    }
}

TEST_CASE("property: serialize then parse is the identity") {
    auto rng = pdc::seeded_engine("io-round-trip");
    for (int trial = 0; trial < 300; ++trial) {
        pdc::Instance inst{std::nullopt, pdc::random_instance(rng)};
        if (trial % 2) inst.label = "instance " + std::to_string(trial);
        const std::string text = pdc::serialize_instance(inst);
        const auto back = pdc::parse_instance(text);
        CHECK(back == inst);
        CHECK(pdc::serialize_instance(back) == text);
    }
}
