#include "harmonic/spectra/bindings.hpp"

#include <cmath>
#include <stdexcept>

namespace harmonic::spectra {

using jets::Generator;

Bindings flat_bindings(int n) {
  Bindings b;
  b.n = n;
  // Every curvature trace vanishes, residuals included.
  b.policy = ResidualPolicy::zero;
  return b;
}

Bindings bindings_from_report(const curvio::InvariantReport& rep, ResidualPolicy policy) {
  const double n = rep.n;
  Bindings b;
  b.n = rep.n;
  b.C = rep.C;
  b.H = rep.H;
  b.L = rep.L;
  b.mean_T2 = 3.0 * rep.normDR2 / (n * (n + 2) * (n + 4));
  b.mean_Q0 = (n * rep.C * rep.C * rep.C + 2.0 * rep.rcirc - 0.25 * rep.Rhat) / (n * (n + 2));
  b.policy = policy;
  return b;
}

Bindings harmonic_bindings(int n, double C, double H, double L, double norm_dr2, ResidualPolicy policy) {
  const double nd = n;
  const double norm_r2 = (2.0 / 3.0) * nd * ((nd + 2) * H - C * C);
  const double k = nd * (nd + 2) * (nd + 4) * L - 32.0 * nd * C * C * C - 144.0 * C * norm_r2;
  const double rcirc = (224.0 * C * norm_r2 - k + 85.0 * norm_dr2) / 480.0;
  const double rhat = 2.0 * C * norm_r2 + norm_dr2 - 4.0 * rcirc;
  Bindings b;
  b.n = n;
  b.C = C;
  b.H = H;
  b.L = L;
  b.mean_T2 = 3.0 * norm_dr2 / (nd * (nd + 2) * (nd + 4));
  b.mean_Q0 = (nd * C * C * C + 2.0 * rcirc - 0.25 * rhat) / (nd * (nd + 2));
  b.policy = policy;
  return b;
}

namespace {

double constant_value(const Generator& g, const Bindings& b) {
  switch (g.kind()) {
    case Generator::Kind::n: return b.n;
    case Generator::Kind::C: return b.C;
    case Generator::Kind::H: return b.H;
    case Generator::Kind::L: return b.L;
    default: throw std::logic_error("not a constant generator");
  }
}

double monomial_mean(const jets::Monomial& m, const Bindings& b) {
  double constant = 1.0;
  const Generator* moving = nullptr;
  bool has_residual = false;
  for (const auto& [g, e] : m.factors()) {
    if (g.kind() == Generator::Kind::residual) has_residual = true;
    if (!g.depends_on_direction()) {
      constant *= std::pow(constant_value(g, b), e);
    } else {
      moving = &g;
    }
  }
  const int degree = m.direction_degree();
  if (degree == 0) return constant;

  if (has_residual) {
    if (degree == 1 && moving->trace().derivative_count() % 2 == 1) return 0.0;
    if (b.policy == ResidualPolicy::zero) return 0.0;
    throw std::domain_error("no binding for residual monomial " + m.to_string());
  }
  if (degree > 1) throw std::domain_error("sphere mean of nonlinear monomial " + m.to_string() + " is not bound");
  return constant * (moving->kind() == Generator::Kind::T2 ? b.mean_T2 : b.mean_Q0);
}

} // namespace

double evaluate(const jets::ScalarPolynomial& p, const Bindings& b) {
  double s = 0.0;
  for (const auto& [m, c] : p.terms()) s += to_double(c) * monomial_mean(m, b);
  return s;
}

RadialScalarSeries evaluate(const jets::ScalarSeries& s, const Bindings& b) {
  RadialScalarSeries out(s.is_exact() ? RadialScalarSeries::kExact : s.truncation());
  for (const auto& [p, c] : s.coeffs()) out.add_to(p, evaluate(c, b));
  return out;
}

} // namespace harmonic::spectra
