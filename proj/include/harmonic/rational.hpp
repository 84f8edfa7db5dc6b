#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace harmonic {

using Rational = boost::multiprecision::cpp_rational;

/// Renders as `p/q`, or `p` for integers.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

Rational binomial(int n, int k);
Rational factorial(int n);

} // namespace harmonic
