#pragma once

// Instance files: JSON objects
//
//   { "label": "...",                       (optional)
//     "dimension": 1,
//     "plus":  [ {"a": "-4", "v": ["2"]}, ... ],
//     "minus": [ {"b": "-1", "w": ["1"]}, ... ] }
//
// Every number except the dimension is a string in the rational grammar
// ("-4", "3/2", "0.25"). Unknown keys are rejected.

#include "pdc/dcfunc.hpp"
#include "pdc/error.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace pdc {

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct Instance {
    std::optional<std::string> label;
    PolyhedralDC function;

    friend bool operator==(const Instance&, const Instance&) = default;
};

Instance parse_instance(std::string_view text);

/// Reads and parses a file; unreadable files raise ParseError at 0:0.
Instance load_instance(const std::string& path);

std::string serialize_instance(const Instance& instance);

} // namespace pdc
