#pragma once

#include <map>
#include <string>

namespace harmonic::spectra {

/// Truncated Laurent series in r with real coefficients. Known exactly
/// through r^truncation(); products and quotients track the truncation the
/// operands justify.
class RadialScalarSeries {
public:
  static constexpr int kExact = 1 << 20;

  explicit RadialScalarSeries(int truncation = kExact) : truncation_(truncation) {}
  static RadialScalarSeries monomial(int power, double c, int truncation = kExact);

  int truncation() const { return truncation_; }
  bool is_exact() const { return truncation_ >= kExact; }
  const std::map<int, double>& coeffs() const { return coeffs_; }

  /// Lowest power with a nonzero coefficient; truncation()+1 if none.
  int valuation() const;
  /// Throws std::out_of_range above the truncation.
  double coefficient(int power) const;
  void add_to(int power, double c);

  RadialScalarSeries truncated(int order) const;
  RadialScalarSeries derivative() const;
  /// Term-wise antiderivative with zero constant; throws on an r^-1 term.
  RadialScalarSeries integral() const;
  /// Multiplies by r^k.
  RadialScalarSeries shifted(int k) const;

  RadialScalarSeries& operator+=(const RadialScalarSeries& o);
  RadialScalarSeries& operator-=(const RadialScalarSeries& o);
  friend RadialScalarSeries operator+(RadialScalarSeries a, const RadialScalarSeries& b) { return a += b; }
  friend RadialScalarSeries operator-(RadialScalarSeries a, const RadialScalarSeries& b) { return a -= b; }
  friend RadialScalarSeries operator*(const RadialScalarSeries& a, double x);
  friend RadialScalarSeries operator*(double x, const RadialScalarSeries& a) { return a * x; }
  friend RadialScalarSeries operator*(const RadialScalarSeries& a, const RadialScalarSeries& b);
  /// Throws std::domain_error if b is zero.
  friend RadialScalarSeries operator/(const RadialScalarSeries& a, const RadialScalarSeries& b);

  std::string to_string() const;

private:
  int truncation_;
  std::map<int, double> coeffs_;
};

/// Coefficients agree within |a - b| <= tol * max(1, |a|, |b|) through the
/// smaller truncation.
bool approx_equal(const RadialScalarSeries& a, const RadialScalarSeries& b, double tol);

} // namespace harmonic::spectra
