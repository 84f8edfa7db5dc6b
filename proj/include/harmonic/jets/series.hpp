#pragma once

#include "harmonic/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace harmonic::jets {

/// Truncation order used for series that are known exactly (constants).
inline constexpr int kExact = 1 << 20;

/// Truncated formal Laurent series in the radius r.
///
/// The series is known exactly through r^truncation(); nothing above that
/// power is ever stored. Products track the truncation that is actually
/// justified by the operands: for a = A + O(r^{Na+1}) and b = B + O(r^{Nb+1})
/// the product is known through min(val(A) + Nb, val(B) + Na).
template <class Coeff>
class LaurentSeries {
public:
  using Map = std::map<int, Coeff>;

  explicit LaurentSeries(int truncation = kExact) : truncation_(truncation) {}

  static LaurentSeries constant(const Coeff& c) {
    LaurentSeries s(kExact);
    s.add_to(0, c);
    return s;
  }

  static LaurentSeries monomial(int power, const Coeff& c, int truncation = kExact) {
    LaurentSeries s(truncation);
    s.add_to(power, c);
    return s;
  }

  int truncation() const { return truncation_; }
  bool is_exact() const { return truncation_ >= kExact; }

  /// Lowest power with a nonzero coefficient; truncation()+1 for the zero series.
  int valuation() const { return coeffs_.empty() ? truncation_ + 1 : coeffs_.begin()->first; }

  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Coeff coefficient(int power) const {
    if (power > truncation_) {
      throw std::out_of_range("coefficient of r^" + std::to_string(power) +
                              " requested beyond truncation order " + std::to_string(truncation_));
    }
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? Coeff{} : it->second;
  }

  void add_to(int power, const Coeff& c) {
    if (power > truncation_ || c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(power, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  LaurentSeries truncated(int order) const {
    LaurentSeries out(std::min(order, truncation_));
    for (const auto& [p, c] : coeffs_) out.add_to(p, c);
    return out;
  }

  /// Term-wise d/dr.
  LaurentSeries derivative() const {
    LaurentSeries out(is_exact() ? kExact : truncation_ - 1);
    for (const auto& [p, c] : coeffs_) {
      if (p != 0) out.add_to(p - 1, c * Rational(p));
    }
    return out;
  }

  LaurentSeries& operator+=(const LaurentSeries& o) {
    truncation_ = std::min(truncation_, o.truncation_);
    for (auto it = coeffs_.upper_bound(truncation_); it != coeffs_.end();) it = coeffs_.erase(it);
    for (const auto& [p, c] : o.coeffs_) add_to(p, c);
    return *this;
  }

  LaurentSeries& operator-=(const LaurentSeries& o) { return *this += o * Rational(-1); }

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }

  friend LaurentSeries operator*(const LaurentSeries& s, const Rational& x) {
    LaurentSeries out(s.truncation_);
    if (x == 0) return out;
    for (const auto& [p, c] : s.coeffs_) out.add_to(p, c * x);
    return out;
  }
  friend LaurentSeries operator*(const Rational& x, const LaurentSeries& s) { return s * x; }

  /// Cauchy product; coefficient products are taken in operand order.
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const long ta = std::min<long>(long(a.valuation()) + b.truncation_, kExact);
    const long tb = std::min<long>(long(b.valuation()) + a.truncation_, kExact);
    LaurentSeries out(int(std::min(ta, tb)));
    if (a.is_exact() && b.is_exact()) out.truncation_ = kExact;
    for (const auto& [pa, ca] : a.coeffs_) {
      for (const auto& [pb, cb] : b.coeffs_) {
        if (pa + pb > out.truncation_) break;
        out.add_to(pa + pb, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.truncation_ == b.truncation_ && a.coeffs_ == b.coeffs_;
  }

  /// `sum(power: coefficient; ...) + O(r^k)`.
  std::string to_string() const {
    std::ostringstream os;
    os << "sum(";
    bool first = true;
    for (const auto& [p, c] : coeffs_) {
      if (!first) os << "; ";
      first = false;
      os << p << ": " << c.to_string();
    }
    os << ")";
    if (!is_exact()) os << " + O(r^" << truncation_ + 1 << ")";
    return os.str();
  }

private:
  int truncation_;
  Map coeffs_;
};

} // namespace harmonic::jets
