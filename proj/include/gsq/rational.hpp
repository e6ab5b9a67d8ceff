#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace gsq {

/// Exact rational used for every charge, density and threshold.
/// boost::rational keeps the value reduced with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// "p/q", always with an explicit denominator ("2/1").
std::string to_string(const Rational& r);

/// Mixed form used in human-facing summaries: "2+4/7", "5/2" -> "2+1/2", "3".
std::string to_mixed_string(const Rational& r);

/// Parses "p/q" or "p". Throws gsq::Error on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace gsq
