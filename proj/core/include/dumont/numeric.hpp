#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace dumont {

// All counting and series arithmetic is exact: counts grow factorially and
// generating-function coefficients must match them bit for bit, so floating
// point and fixed-width integers are banned from the public contracts.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "42" for integers, "3/4" otherwise (denominator kept positive).
std::string to_string(const Count& value);
std::string to_string(const Rational& value);

// Inverse of to_string(Rational). Throws std::invalid_argument on garbage
// or a zero denominator.
Rational rational_from_string(std::string_view text);

Count factorial(int n);
Count binomial(int n, int k);

} // namespace dumont
