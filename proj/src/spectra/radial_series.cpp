#include "harmonic/spectra/radial_series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace harmonic::spectra {

RadialScalarSeries RadialScalarSeries::monomial(int power, double c, int truncation) {
  RadialScalarSeries s(truncation);
  s.add_to(power, c);
  return s;
}

int RadialScalarSeries::valuation() const {
  return coeffs_.empty() ? truncation_ + 1 : coeffs_.begin()->first;
}

double RadialScalarSeries::coefficient(int power) const {
  if (power > truncation_)
    throw std::out_of_range("coefficient of r^" + std::to_string(power) + " requested beyond truncation order " +
                            std::to_string(truncation_));
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? 0.0 : it->second;
}

void RadialScalarSeries::add_to(int power, double c) {
  if (power > truncation_ || c == 0.0) return;
  auto [it, inserted] = coeffs_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) coeffs_.erase(it);
  }
}

RadialScalarSeries RadialScalarSeries::truncated(int order) const {
  RadialScalarSeries out(std::min(order, truncation_));
  for (const auto& [p, c] : coeffs_) out.add_to(p, c);
  return out;
}

RadialScalarSeries RadialScalarSeries::derivative() const {
  RadialScalarSeries out(is_exact() ? kExact : truncation_ - 1);
  for (const auto& [p, c] : coeffs_)
    if (p != 0) out.add_to(p - 1, c * p);
  return out;
}

RadialScalarSeries RadialScalarSeries::integral() const {
  RadialScalarSeries out(is_exact() ? kExact : truncation_ + 1);
  for (const auto& [p, c] : coeffs_) {
    if (p == -1) throw std::domain_error("integral of r^-1 is not a Laurent series");
    out.add_to(p + 1, c / (p + 1));
  }
  return out;
}

RadialScalarSeries RadialScalarSeries::shifted(int k) const {
  RadialScalarSeries out(is_exact() ? kExact : truncation_ + k);
  for (const auto& [p, c] : coeffs_) out.add_to(p + k, c);
  return out;
}

RadialScalarSeries& RadialScalarSeries::operator+=(const RadialScalarSeries& o) {
  truncation_ = std::min(truncation_, o.truncation_);
  for (auto it = coeffs_.upper_bound(truncation_); it != coeffs_.end();) it = coeffs_.erase(it);
  for (const auto& [p, c] : o.coeffs_) add_to(p, c);
  return *this;
}

RadialScalarSeries& RadialScalarSeries::operator-=(const RadialScalarSeries& o) { return *this += o * -1.0; }

RadialScalarSeries operator*(const RadialScalarSeries& a, double x) {
  RadialScalarSeries out(a.truncation_);
  if (x == 0.0) return out;
  for (const auto& [p, c] : a.coeffs_) out.add_to(p, c * x);
  return out;
}

RadialScalarSeries operator*(const RadialScalarSeries& a, const RadialScalarSeries& b) {
  constexpr long kMax = RadialScalarSeries::kExact;
  const long ta = std::min<long>(long(a.valuation()) + b.truncation_, kMax);
  const long tb = std::min<long>(long(b.valuation()) + a.truncation_, kMax);
  RadialScalarSeries out(int(std::min(ta, tb)));
  if (a.is_exact() && b.is_exact()) out.truncation_ = kMax;
  for (const auto& [pa, ca] : a.coeffs_)
    for (const auto& [pb, cb] : b.coeffs_) {
      if (pa + pb > out.truncation_) break;
      out.add_to(pa + pb, ca * cb);
    }
  return out;
}

RadialScalarSeries operator/(const RadialScalarSeries& a, const RadialScalarSeries& b) {
  if (b.coeffs_.empty()) throw std::domain_error("division by the zero series");
  const int vb = b.valuation();
  const double b0 = b.coeffs_.begin()->second;
  if (a.coeffs_.empty()) return RadialScalarSeries(a.is_exact() ? RadialScalarSeries::kExact : a.truncation_ - vb);
  if (b.coeffs_.size() == 1 && b.is_exact()) {
    RadialScalarSeries out(a.is_exact() ? RadialScalarSeries::kExact : a.truncation_ - vb);
    for (const auto& [p, c] : a.coeffs_) out.add_to(p - vb, c / b0);
    return out;
  }
  const int va = a.valuation();
  const long rel_a = a.is_exact() ? RadialScalarSeries::kExact : long(a.truncation_) - va;
  const long rel_b = b.is_exact() ? RadialScalarSeries::kExact : long(b.truncation_) - vb;
  const long rel = std::min(rel_a, rel_b);
  if (rel >= RadialScalarSeries::kExact) throw std::domain_error("quotient of exact series needs a truncation");
  RadialScalarSeries out(int(va - vb + rel));
  std::vector<double> q(std::size_t(std::max<long>(rel + 1, 0)), 0.0);
  for (long j = 0; j <= rel; ++j) {
    double s = a.coefficient(int(va + j));
    for (long i = 1; i <= j; ++i) {
      auto it = b.coeffs_.find(int(vb + i));
      if (it != b.coeffs_.end()) s -= it->second * q[std::size_t(j - i)];
    }
    q[std::size_t(j)] = s / b0;
    out.add_to(int(va - vb + j), q[std::size_t(j)]);
  }
  return out;
}

std::string RadialScalarSeries::to_string() const {
  std::ostringstream os;
  os << "sum(";
  bool first = true;
  char buf[40];
  for (const auto& [p, c] : coeffs_) {
    if (!first) os << "; ";
    first = false;
    std::snprintf(buf, sizeof buf, "%.17g", c);
    os << p << ": " << buf;
  }
  os << ")";
  if (!is_exact()) os << " + O(r^" << truncation_ + 1 << ")";
  return os.str();
}

bool approx_equal(const RadialScalarSeries& a, const RadialScalarSeries& b, double tol) {
  const int t = std::min(a.truncation(), b.truncation());
  auto check = [&](const RadialScalarSeries& x) {
    for (const auto& [p, c] : x.coeffs()) {
      if (p > t) break;
      const double u = a.coefficient(p), v = b.coefficient(p);
      if (std::abs(u - v) > tol * std::max({1.0, std::abs(u), std::abs(v)})) return false;
    }
    return true;
  };
  return check(a) && check(b);
}

} // namespace harmonic::spectra
