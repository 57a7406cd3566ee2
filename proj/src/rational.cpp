#include "pdc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pdc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto bad = [&] { return std::invalid_argument("not a rational: \"" + std::string(text) + "\""); };

    Rational r;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw bad();
        mpz_class d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
        r = Rational(mpz_class(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) throw bad();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        r = Rational(mpz_class(std::string(whole) + std::string(frac), 10), scale);
    } else {
        if (!all_digits(body)) throw bad();
        r = Rational(mpz_class(std::string(body), 10));
    }
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

Vec parse_vector(std::string_view text) {
    Vec out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        out.push_back(parse_rational(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

std::optional<std::string> to_decimal(const Rational& r) {
    mpz_class den = r.get_den();
    unsigned twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
    if (den != 1) return std::nullopt;

    const unsigned digits = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled_num = r.get_num() * (scale / r.get_den());
    const bool negative = scaled_num < 0;
    if (negative) scaled_num = -scaled_num;

    std::string s = scaled_num.get_str();
    if (digits > 0) {
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    return negative ? "-" + s : s;
}

std::string to_plot_string(const Rational& r) {
    if (auto d = to_decimal(r)) return *d;
    return to_string(r);
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec scaled(const Vec& v, const Rational& s) {
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x * s);
    return out;
}

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

} // namespace pdc
