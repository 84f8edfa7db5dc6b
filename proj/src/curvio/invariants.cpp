#include "harmonic/curvio/invariants.hpp"

#include "harmonic/curvio/averages.hpp"

#include <algorithm>
#include <cmath>

namespace harmonic::curvio {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

double norm_r2(const CurvaturePoint& cp) {
  double s = 0.0;
  for (double x : cp.curvature_data()) s += x * x;
  return s;
}

double norm_dr2(const CurvaturePoint& cp) {
  double s = 0.0;
  for (double x : cp.derivative_data()) s += x * x;
  return s;
}

double r_hat(const CurvaturePoint& cp) {
  const int n = cp.dim();
  const int n2 = n * n;
  Eigen::MatrixXd m(n2, n2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) m(i * n + j, k * n + l) = cp.R(i, j, k, l);
  return (m * m * m).trace();
}

double r_circ(const CurvaturePoint& cp) {
  const int n = cp.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double r = cp.R(i, j, k, l);
          if (r == 0.0) continue;
          double inner = 0.0;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) inner += cp.R(j, a, l, b) * cp.R(a, i, b, k);
          s += r * inner;
        }
  return s;
}

InvariantReport invariants(const CurvaturePoint& cp, const InvariantOptions& opts) {
  const int n = cp.dim();
  InvariantReport rep;
  rep.n = n;

  const Eigen::MatrixXd ric = ricci(cp);
  rep.C = ric.trace() / n;
  rep.scal = ric.trace();
  rep.ricci_deviation = (ric - rep.C * Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  rep.einstein = rep.ricci_deviation <= opts.tol;

  rep.normR2 = norm_r2(cp);
  rep.normDR2 = norm_dr2(cp);
  rep.Rhat = r_hat(cp);
  rep.rcirc = r_circ(cp);

  std::vector<Eigen::VectorXd> dirs = halton_directions(n, opts.samples);
  rep.halton_samples = int(dirs.size());
  std::vector<Eigen::VectorXd> uni = uniform_directions(n, opts.samples, opts.seed);
  rep.uniform_samples = int(uni.size());
  dirs.insert(dirs.end(), uni.begin(), uni.end());
  if (dirs.empty()) return rep;

  std::vector<double> hs, ls;
  hs.reserve(dirs.size());
  ls.reserve(dirs.size());
  for (const auto& u : dirs) {
    const Eigen::MatrixXd ru = jacobi(cp, u);
    const Eigen::MatrixXd du = djacobi(cp, u);
    const Eigen::MatrixXd ru2 = ru * ru;
    hs.push_back(ru2.trace());
    ls.push_back(32.0 * (ru2 * ru).trace() - 9.0 * (du * du).trace());
  }
  auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / double(v.size());
  };
  auto spread = [](const std::vector<double>& v, double m) {
    double w = 0.0;
    for (double x : v) w = std::max(w, std::abs(x - m));
    return w;
  };
  rep.H = mean(hs);
  rep.L = mean(ls);
  rep.h_spread = spread(hs, rep.H);
  rep.l_spread = spread(ls, rep.L);
  return rep;
}

std::vector<IdentityCheck> harmonic_identity_suite(const CurvaturePoint& cp, const InvariantReport& rep,
                                                   double tol) {
  const int n = cp.dim();
  const double nd = n;
  const double C = rep.C, H = rep.H, L = rep.L;
  const double frame_const = (2.0 / 3.0) * ((nd + 2) * H - C * C);

  std::vector<IdentityCheck> out;
  auto add = [&](std::string name, double lhs, double rhs) {
    out.push_back({std::move(name), lhs, rhs, close(lhs, rhs, tol)});
  };

  // Worst entry of the Gram matrix of the maps x -> R(x, ., .).
  double worst_lhs = frame_const, worst_dev = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      double g = 0.0;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) g += cp.R(x, j, k, l) * cp.R(y, j, k, l);
      const double expect = x == y ? frame_const : 0.0;
      const double dev = std::abs(g - expect) / std::max({1.0, std::abs(g), std::abs(expect)});
      if (dev > worst_dev) {
        worst_dev = dev;
        worst_lhs = g - expect + frame_const;
      }
    }
  add("frame form", worst_lhs, frame_const);
  add("norm", rep.normR2, nd * frame_const);
  add("sixth order",
      32.0 * (nd * C * C * C + 4.5 * C * rep.normR2 + 3.5 * rep.Rhat - rep.rcirc) - 27.0 * rep.normDR2,
      nd * (nd + 2) * (nd + 4) * L);
  add("lichnerowicz", 2.0 * C * rep.normR2 + rep.normDR2, rep.Rhat + 4.0 * rep.rcirc);

  const auto a = a_contractions(cp);
  add("a-contraction aabb", a[0], nd * C * C * C);
  add("a-contraction abab", a[1], rep.rcirc);
  add("a-contraction abba", a[2], rep.rcirc - 0.25 * rep.Rhat);
  return out;
}

} // namespace harmonic::curvio
