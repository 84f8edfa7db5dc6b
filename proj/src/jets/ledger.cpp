#include "harmonic/jets/ledger.hpp"

#include <stdexcept>
#include <vector>

namespace harmonic::jets {

namespace {

// C_u^(k)(0) for k = 0..max_k.
std::vector<EndoPolynomial> ledger_derivatives(int max_k) {
  std::vector<EndoPolynomial> c(std::max(max_k, 1) + 1);
  c[0] = EndoPolynomial::unit();
  for (int k = 2; k <= max_k; ++k) {
    EndoPolynomial rhs = EndoPolynomial::jet(k - 2) * Rational(-k * (k - 1));
    for (int l = 1; l < k; ++l) {
      if (c[l].is_zero() || c[k - l].is_zero()) continue;
      rhs += (c[l] * c[k - l]) * (-binomial(k, l));
    }
    c[k] = rhs * Rational(1, k + 1);
  }
  c.resize(max_k + 1);
  return c;
}

} // namespace

EndoSeries ledger_series(int order) {
  if (order < -1) throw std::invalid_argument("ledger_series: truncation order must be >= -1");
  const auto c = ledger_derivatives(order + 1);
  EndoSeries sigma(order);
  for (int k = 0; k <= order + 1; ++k) sigma.add_to(k - 1, c[k] * (Rational(1) / factorial(k)));
  return sigma;
}

EndoSeries jacobi_series(int order) {
  EndoSeries out(order);
  for (int k = 0; k <= order; ++k) out.add_to(k, EndoPolynomial::jet(k) * (Rational(1) / factorial(k)));
  return out;
}

EndoSeries riccati_residual(int order) {
  if (order < 0) throw std::invalid_argument("riccati_residual: order must be >= 0");
  const EndoSeries sigma = ledger_series(order + 1);
  EndoSeries residual = sigma.derivative() + sigma * sigma + jacobi_series(order + 1);
  return residual.truncated(order);
}

} // namespace harmonic::jets
