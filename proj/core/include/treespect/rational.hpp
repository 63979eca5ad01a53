#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace treespect {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Entries of a vector over the vertices of a graph, in vertex order.
using RationalVector = std::vector<Rational>;

// Accepts "p", "-p" or "p/q" with decimal digits and q > 0.
// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Integer string when the denominator is one, "p/q" otherwise.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

std::vector<std::string> format_vector(const RationalVector& v);

}  // namespace treespect
