#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace assignalg {

using Integer = boost::multiprecision::cpp_int;

// Exact rational numbers, always stored in lowest terms with positive
// denominator. No operation in this library ever rounds.
using Rational = boost::multiprecision::cpp_rational;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "num/den" or a plain integer string. Throws ParseError on a
// malformed value or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical text form: "num" when the denominator is 1, else "num/den".
std::string rational_to_string(const Rational& value);

using LinearForm = std::vector<Rational>;

}  // namespace assignalg
