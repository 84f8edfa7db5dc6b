#include "harmonic/jets/sphere_norms.hpp"

#include "harmonic/jets/ledger.hpp"
#include "harmonic/jets/trace.hpp"

#include <stdexcept>

namespace harmonic::jets {

namespace {

ScalarSeries finish(const ScalarSeries& s, int order, const char* what) {
  if (s.truncation() < order) {
    throw std::logic_error(std::string(what) + ": series known only through r^" +
                           std::to_string(s.truncation()));
  }
  return s.truncated(order);
}

ScalarSeries times(const ScalarPolynomial& p, const ScalarSeries& s) { return constant_series(p) * s; }

} // namespace

ScalarSeries trace_sigma_series(int order) { return series_trace(ledger_series(order)); }

ScalarSeries trace_sigma2_series(int order) {
  const EndoSeries sigma = ledger_series(order + 1);
  return finish(series_trace(sigma * sigma), order, "trace_sigma2_series");
}

ScalarSeries ricS_norm_series(int order) {
  const EndoSeries sigma = ledger_series(order + 3);
  const EndoSeries dsigma = sigma.derivative();
  const ScalarSeries tr_s = series_trace(sigma);
  const ScalarSeries tr_s2 = series_trace(sigma * sigma);
  const ScalarSeries tr_ds = series_trace(dsigma);
  const ScalarSeries tr_s_ds = series_trace(sigma * dsigma);
  const ScalarSeries tr_ds_ds = series_trace(dsigma * dsigma);
  const ScalarPolynomial& n = sym_n();
  const ScalarPolynomial& c = sym_C();

  ScalarSeries out = constant_series((n - Rational(1)) * c * c);
  out += times(c * Rational(2), tr_s * tr_s);
  out += tr_s * tr_s * tr_s2;
  out += times(c * Rational(2), tr_ds);
  out += Rational(2) * (tr_s * tr_s_ds);
  out += tr_ds_ds;
  return finish(out, order, "ricS_norm_series");
}

ScalarSeries rS_norm_series(int order) {
  const EndoSeries sigma = ledger_series(order + 3);
  const EndoSeries sigma2 = sigma * sigma;
  const ScalarSeries tr_s2 = series_trace(sigma2);
  const ScalarSeries tr_s4 = series_trace(sigma2 * sigma2);
  const ScalarPolynomial& n = sym_n();
  const ScalarPolynomial& c = sym_C();
  const ScalarPolynomial& h = sym_H();

  ScalarSeries out = constant_series(Rational(2, 3) * (n - Rational(4)) * ((n + Rational(2)) * h - c * c) +
                                     h * Rational(4));
  out += Rational(2) * (tr_s2 * tr_s2);
  out -= Rational(2) * tr_s4;
  out += Rational(4) * q_contract(sigma, sigma);
  return finish(out, order, "rS_norm_series");
}

BallIntegrands ball_integrand_series(int order) {
  const EndoSeries sigma = ledger_series(order + 2);
  const ScalarSeries tr_s = series_trace(sigma);
  const ScalarSeries tr_s2 = series_trace(sigma * sigma);
  BallIntegrands out{
      finish(series_trace(jacobi_series(order + 2) * sigma), order, "ball_integrand_series"),
      finish(series_trace(sigma * sigma * sigma), order, "ball_integrand_series"),
      finish(tr_s * tr_s2, order, "ball_integrand_series"),
  };
  return out;
}

} // namespace harmonic::jets
