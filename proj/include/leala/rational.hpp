#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace leala {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

/// Prints "p/q", omitting "/q" when q = 1.
std::string rational_to_string(const Rational& r);

/// Parses the rational_to_string encoding. Returns nullopt on malformed input.
std::optional<Rational> rational_from_string(const std::string& text);

} // namespace leala
