#include "harmonic/models/models.hpp"

#include "harmonic/curvio/curvature_point.hpp"

#include <cmath>
#include <stdexcept>

namespace harmonic::models {

MetricLieAlgebra::MetricLieAlgebra(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("Lie algebra dimension must be positive");
  c_.assign(std::size_t(dim) * dim * dim, 0.0);
}

void MetricLieAlgebra::set_bracket(int i, int j, int k, double value) {
  c_[index(i, j, k)] = value;
  c_[index(j, i, k)] = -value;
}

double MetricLieAlgebra::jacobi_residual() const {
  const int n = dim_;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          double s = 0.0;
          for (int p = 0; p < n; ++p) s += c(i, j, p) * c(p, k, m) + c(j, k, p) * c(p, i, m) + c(k, i, p) * c(p, j, m);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

MetricLieAlgebra damek_ricci(const CliffordModuleSpec& spec) {
  std::vector<Eigen::MatrixXd> js;
  int dv = 0;
  if (spec.q == 0) {
    if (spec.a_plus < 1 || spec.a_minus != 0) throw std::invalid_argument("q=0 needs dim v >= 1");
    dv = spec.a_plus;
  } else {
    js = clifford_module(spec);
    dv = int(js.front().rows());
  }
  const int q = spec.q;
  MetricLieAlgebra g(1 + dv + q);
  const int v0 = 1, z0 = 1 + dv;
  for (int a = 0; a < q; ++a)
    for (int x = 0; x < dv; ++x)
      for (int y = x + 1; y < dv; ++y) {
        const double val = js[a](y, x);  // <J_a x, y>
        if (val != 0.0) g.set_bracket(v0 + x, v0 + y, z0 + a, val);
      }
  for (int x = 0; x < dv; ++x) g.set_bracket(0, v0 + x, v0 + x, 0.5);
  for (int a = 0; a < q; ++a) g.set_bracket(0, z0 + a, z0 + a, 1.0);

  if (g.jacobi_residual() > 1e-12) throw std::runtime_error("Damek-Ricci bracket violates the Jacobi identity");
  return g;
}

curvio::CurvaturePoint curvature_point(const MetricLieAlgebra& g) {
  const int n = g.dim();
  // gamma(i,j,k) = <nabla_{e_i} e_j, e_k>
  std::vector<double> gamma(std::size_t(n) * n * n);
  auto G = [&](int i, int j, int k) -> double& { return gamma[(std::size_t(i) * n + j) * n + k]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) G(i, j, k) = 0.5 * (g.c(i, j, k) - g.c(j, k, i) + g.c(k, i, j));

  std::vector<Eigen::MatrixXd> nab(n, Eigen::MatrixXd::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) nab[i](l, k) = G(i, k, l);

  // R(X,Y) = nabla_[X,Y] - [nabla_X, nabla_Y]
  curvio::CurvaturePoint cp(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXd r = -(nab[i] * nab[j] - nab[j] * nab[i]);
      for (int p = 0; p < n; ++p)
        if (g.c(i, j, p) != 0.0) r += g.c(i, j, p) * nab[p];
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) cp.R(i, j, k, l) = r(l, k);
    }

  // Components are constant, so only the connection terms survive.
  cp.enable_derivative();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            double s = 0.0;
            for (int p = 0; p < n; ++p)
              s += G(m, i, p) * cp.R(p, j, k, l) + G(m, j, p) * cp.R(i, p, k, l) +
                   G(m, k, p) * cp.R(i, j, p, l) + G(m, l, p) * cp.R(i, j, k, p);
            cp.DR(i, j, k, l, m) = -s;
          }

  const auto bad = curvio::validate(cp, 1e-10);
  if (!bad.empty()) throw std::runtime_error("curvature of Lie algebra fails validation: " + bad.front());
  return cp;
}

} // namespace harmonic::models
