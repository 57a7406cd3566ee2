#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdc {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; values built by hand must go through
/// parse_rational or make_rational.
using Rational = mpq_class;
using Vec = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

/// Parses "-4", "+3", "3/2", "-0.25". Throws std::invalid_argument on
/// anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1/2,-3".
Vec parse_vector(std::string_view text);

/// "p/q" when q != 1, else "p".
std::string to_string(const Rational& r);
std::string to_string(const Vec& v);

/// Finite decimal expansion when the denominator has no prime factors other
/// than 2 and 5 ("-0.5", "3", "0.125"); nullopt otherwise.
std::optional<std::string> to_decimal(const Rational& r);

/// Decimal when exact, else "p/q".
std::string to_plot_string(const Rational& r);

Rational dot(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Rational& s);
Vec zeros(std::size_t n);

} // namespace pdc
