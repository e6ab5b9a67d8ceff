#include "gsq/rational.hpp"

#include <charconv>

#include "gsq/error.hpp"

namespace gsq {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_mixed_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    // floor division so the fractional part is in (0, 1)
    std::int64_t whole = r.numerator() / r.denominator();
    if (r.numerator() < 0) --whole;
    Rational frac = r - Rational(whole);
    if (whole == 0) return to_string(frac);
    return std::to_string(whole) + "+" + to_string(frac);
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw Error("malformed rational '" + whole + "'");
    return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string_view s(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s, text));
    std::int64_t num = parse_int(s.substr(0, slash), text);
    std::int64_t den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw Error("zero denominator in '" + text + "'");
    return Rational(num, den);
}

}  // namespace gsq
