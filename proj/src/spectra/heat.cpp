#include "harmonic/spectra/heat.hpp"

#include "harmonic/curvio/averages.hpp"
#include "harmonic/curvio/invariants.hpp"
#include "harmonic/jets/sphere_norms.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace harmonic::spectra {

namespace {

// The symbolic series depend only on the order; each is derived once per
// process and shared.
template <auto Make>
const auto& cached(int order) {
  using T = decltype(Make(0));
  static std::mutex mu;
  static std::map<int, T> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, Make(order)).first;
  return it->second;
}

const jets::ScalarSeries& trace_sigma(int order) { return cached<&jets::trace_sigma_series>(order); }
const jets::ScalarSeries& trace_sigma2(int order) { return cached<&jets::trace_sigma2_series>(order); }
const jets::ScalarSeries& ric_norm(int order) { return cached<&jets::ricS_norm_series>(order); }
const jets::ScalarSeries& r_norm(int order) { return cached<&jets::rS_norm_series>(order); }
const jets::BallIntegrands& ball_integrands(int order) { return cached<&jets::ball_integrand_series>(order); }

double omega(const Bindings& b) { return curvio::sphere_volume(b.n); }

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

} // namespace

RadialScalarSeries volume_series(const Bindings& b, int order) {
  check_order(order);
  if (b.n < 2) throw std::invalid_argument("volume series needs n >= 2");
  // theta' = g theta with g = Tr(sigma) - (n-1)/r, theta(0) = 1
  const RadialScalarSeries tr = evaluate(trace_sigma(order - 1), b);
  std::vector<double> g(std::size_t(order) + 1, 0.0), theta(std::size_t(order) + 1, 0.0);
  for (int k = 1; k < order; ++k) g[k] = tr.coefficient(k);
  theta[0] = 1.0;
  for (int m = 0; m < order; ++m) {
    double s = 0.0;
    for (int k = 1; k <= m; ++k) s += g[k] * theta[m - k];
    theta[m + 1] = s / (m + 1);
  }
  RadialScalarSeries v(b.n - 1 + order);
  for (int m = 0; m <= order; ++m) v.add_to(b.n - 1 + m, theta[m]);
  return v;
}

RadialScalarSeries ball_volume_series(const Bindings& b, int order) { return volume_series(b, order).integral(); }

RadialScalarSeries scalS_series(const Bindings& b, int order) {
  check_order(order);
  const RadialScalarSeries v = volume_series(b, order + 2);
  RadialScalarSeries s = v.derivative().derivative() / v;
  s += RadialScalarSeries::monomial(0, (b.n - 1) * b.C);
  return s.truncated(order);
}

RadialScalarSeries scalS_series_gauss(const Bindings& b, int order) {
  check_order(order);
  const RadialScalarSeries t = evaluate(trace_sigma(order + 1), b);
  RadialScalarSeries s = t * t - evaluate(trace_sigma2(order), b);
  s += RadialScalarSeries::monomial(0, (b.n - 2) * b.C);
  return s.truncated(order);
}

RadialScalarSeries a1_series(const Bindings& b, int order) {
  return volume_series(b, order) * scalS_series(b, order) * (omega(b) / 6.0);
}

RadialScalarSeries a1_series_gauss(const Bindings& b, int order) {
  return volume_series(b, order) * scalS_series_gauss(b, order) * (omega(b) / 6.0);
}

RadialScalarSeries sphere_curvature_gap(const Bindings& b, int order) {
  check_order(order);
  return evaluate(r_norm(order), b) - evaluate(ric_norm(order), b);
}

RadialScalarSeries a2_sphere_density(const Bindings& b, int order) {
  check_order(order);
  const RadialScalarSeries s = scalS_series(b, order + 2);
  RadialScalarSeries d = s * s * 5.0 - evaluate(ric_norm(order), b) * 2.0 + evaluate(r_norm(order), b) * 2.0;
  return d.truncated(order) * (1.0 / 360.0);
}

RadialScalarSeries a2_sphere_series(const Bindings& b, int order) {
  return volume_series(b, order + 4) * a2_sphere_density(b, order) * omega(b);
}

double distinguisher_sphere(const Bindings& b) {
  const Bindings base = harmonic_bindings(b.n, b.C, b.H, b.L, 0.0, b.policy);
  return sphere_curvature_gap(b, 2).coefficient(2) - sphere_curvature_gap(base, 2).coefficient(2);
}

RadialScalarSeries ball_boundary_density(const Bindings& b, Boundary bc, int order) {
  check_order(order);
  const double n = b.n;
  const double d1 = bc == Boundary::dirichlet ? 40.0 / 21.0 : 40.0 / 3.0;
  const double d2 = bc == Boundary::dirichlet ? -88.0 / 7.0 : 8.0;
  const double d3 = bc == Boundary::dirichlet ? 320.0 / 21.0 : 32.0 / 3.0;
  const jets::BallIntegrands& bi = ball_integrands(order);
  const RadialScalarSeries t = evaluate(trace_sigma(order + 2), b);
  RadialScalarSeries m = t * (20.0 * n * b.C - 8.0 * b.C);
  m += evaluate(bi.jacobi_sigma, b) * 16.0;
  m += t * t * t * d1;
  m += evaluate(bi.sigma_sigma2, b) * d2;
  m += evaluate(bi.sigma_cubed, b) * d3;
  return m.truncated(order);
}

namespace {

double interior_density(const Bindings& b) {
  const double n = b.n, C = b.C, H = b.H;
  return (5.0 * n * n * C * C - 2.0 * n * C * C + (4.0 / 3.0) * n * ((n + 2) * H - C * C)) / 360.0;
}

} // namespace

RadialScalarSeries a2_ball_series(const Bindings& b, Boundary bc, int order) {
  const RadialScalarSeries m = ball_boundary_density(b, bc, order);
  const RadialScalarSeries v = volume_series(b, order + 3);
  return (v.integral() * interior_density(b) + v * m * (1.0 / 360.0)) * omega(b);
}

RadialScalarSeries a2_ball_quotient(const Bindings& b, Boundary bc, int order) {
  const RadialScalarSeries m = ball_boundary_density(b, bc, order);
  const RadialScalarSeries v = volume_series(b, order + 3);
  return RadialScalarSeries::monomial(0, interior_density(b)) + (v / v.integral()) * m * (1.0 / 360.0);
}

RadialScalarSeries a05_ball_series(const Bindings& b, Boundary bc, int order) {
  const double sign = bc == Boundary::dirichlet ? -1.0 : 1.0;
  return volume_series(b, order) * (sign * 0.5 * std::sqrt(std::numbers::pi) * omega(b));
}

double distinguisher_ball(const Bindings& b, Boundary bc) {
  const Bindings base = harmonic_bindings(b.n, b.C, b.H, b.L, 0.0, b.policy);
  return ball_boundary_density(b, bc, 3).coefficient(3) - ball_boundary_density(base, bc, 3).coefficient(3);
}

HeatReport heat_report(const std::string& label, const Bindings& b, double norm_dr2, const HeatOptions& opts) {
  check_order(opts.sphere_order);
  if (opts.ball_order < 3) throw std::invalid_argument("ball order must be at least 3");
  HeatReport r;
  r.label = label;
  r.n = b.n;
  r.C = b.C;
  r.H = b.H;
  r.L = b.L;
  r.norm_dr2 = norm_dr2;
  r.sphere_order = opts.sphere_order;
  r.ball_order = opts.ball_order;

  const int so = opts.sphere_order, bo = opts.ball_order;
  r.a0 = volume_series(b, so + 4) * omega(b);
  r.a1 = a1_series(b, so + 2);
  r.a2_density = a2_sphere_density(b, so);
  r.a2 = volume_series(b, so + 4) * r.a2_density * omega(b);
  r.curvature_gap = sphere_curvature_gap(b, so);

  r.ball_a0 = ball_volume_series(b, bo + 3) * omega(b);
  r.ball_a05_dirichlet = a05_ball_series(b, Boundary::dirichlet, bo + 3);
  r.ball_a2_dirichlet = a2_ball_series(b, Boundary::dirichlet, bo);
  r.ball_a2_neumann = a2_ball_series(b, Boundary::neumann, bo);
  r.ball_density_dirichlet = ball_boundary_density(b, Boundary::dirichlet, bo);
  r.ball_density_neumann = ball_boundary_density(b, Boundary::neumann, bo);

  r.d_sphere = distinguisher_sphere(b);
  r.d_dirichlet = distinguisher_ball(b, Boundary::dirichlet);
  r.d_neumann = distinguisher_ball(b, Boundary::neumann);
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::dimension_mismatch: return "dimension-mismatch";
    case Verdict::chl_mismatch: return "CHL-mismatch";
    case Verdict::nabla_r_mismatch: return "nablaR-mismatch";
    case Verdict::indistinguishable: return "indistinguishable-at-this-order";
  }
  return "unknown";
}

Comparison compare(const HeatReport& a, const HeatReport& b, double tol) {
  Comparison c;
  if (a.n != b.n) {
    c.verdict = Verdict::dimension_mismatch;
    return c;
  }
  c.delta_C = a.C - b.C;
  c.delta_H = a.H - b.H;
  c.delta_L = a.L - b.L;
  c.delta_norm_dr2 = a.norm_dr2 - b.norm_dr2;
  const double ga = a.curvature_gap.coefficient(2), gb = b.curvature_gap.coefficient(2);
  const double da = a.ball_density_dirichlet.coefficient(3), db = b.ball_density_dirichlet.coefficient(3);
  const double na = a.ball_density_neumann.coefficient(3), nb = b.ball_density_neumann.coefficient(3);
  c.delta_sphere_r2 = ga - gb;
  c.delta_dirichlet_r3 = da - db;
  c.delta_neumann_r3 = na - nb;

  using curvio::close;
  if (!close(a.C, b.C, tol) || !close(a.H, b.H, tol) || !close(a.L, b.L, tol))
    c.verdict = Verdict::chl_mismatch;
  else if (!close(ga, gb, tol) || !close(da, db, tol) || !close(na, nb, tol))
    c.verdict = Verdict::nabla_r_mismatch;
  else
    c.verdict = Verdict::indistinguishable;
  return c;
}

} // namespace harmonic::spectra
