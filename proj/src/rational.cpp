#include "harmonic/rational.hpp"

#include <stdexcept>

namespace harmonic {

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational out(1);
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Rational out(1);
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

} // namespace harmonic
