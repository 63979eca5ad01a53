#include "treespect/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace treespect {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  std::string num = body;
  std::string den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  Integer p(num);
  Integer q(den);
  if (q == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  if (negative) p = -p;
  return Rational(p, q);
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

std::vector<std::string> format_vector(const RationalVector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(format_rational(e));
  return out;
}

}  // namespace treespect
