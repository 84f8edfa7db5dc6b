#include "harmonic/curvio/curvature_point.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace harmonic::curvio {

CurvaturePoint::CurvaturePoint(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("CurvaturePoint dimension must be positive");
  r_.assign(std::size_t(n) * n * n * n, 0.0);
}

void CurvaturePoint::enable_derivative() {
  if (dr_.empty()) dr_.assign(r_.size() * std::size_t(n_), 0.0);
}

double& CurvaturePoint::DR(int i, int j, int k, int l, int m) {
  enable_derivative();
  return dr_[index(i, j, k, l) * std::size_t(n_) + std::size_t(m)];
}

void CurvaturePoint::set_symmetric(int i, int j, int k, int l, double value) {
  R(i, j, k, l) = value;
  R(j, i, k, l) = -value;
  R(i, j, l, k) = -value;
  R(j, i, l, k) = value;
  R(k, l, i, j) = value;
  R(l, k, i, j) = -value;
  R(k, l, j, i) = -value;
  R(l, k, j, i) = value;
}

namespace {

void check_unit(const CurvaturePoint& cp, const Eigen::VectorXd& u) {
  if (u.size() != cp.dim()) throw std::invalid_argument("direction has wrong dimension");
  if (std::abs(u.norm() - 1.0) > 1e-8) throw std::invalid_argument("direction is not a unit vector");
}

struct Violation {
  double worst = 0.0;
  std::string where;
  void record(double residual, int i, int j, int k, int l, int m = -1) {
    if (residual <= worst) return;
    worst = residual;
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << "," << l;
    if (m >= 0) os << ";" << m;
    os << ")";
    where = os.str();
  }
};

} // namespace

std::vector<std::string> validate(const CurvaturePoint& cp, double tol) {
  const int n = cp.dim();
  Violation anti_first, anti_second, pair, bianchi, d_anti, d_pair, d_bianchi, d_second;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double r = cp.R(i, j, k, l);
          anti_first.record(std::abs(r + cp.R(j, i, k, l)), i, j, k, l);
          anti_second.record(std::abs(r + cp.R(i, j, l, k)), i, j, k, l);
          pair.record(std::abs(r - cp.R(k, l, i, j)), i, j, k, l);
          bianchi.record(std::abs(r + cp.R(j, k, i, l) + cp.R(k, i, j, l)), i, j, k, l);
          if (!cp.has_derivative()) continue;
          for (int m = 0; m < n; ++m) {
            const double d = cp.DR(i, j, k, l, m);
            d_anti.record(std::max(std::abs(d + cp.DR(j, i, k, l, m)), std::abs(d + cp.DR(i, j, l, k, m))),
                          i, j, k, l, m);
            d_pair.record(std::abs(d - cp.DR(k, l, i, j, m)), i, j, k, l, m);
            d_bianchi.record(std::abs(d + cp.DR(j, k, i, l, m) + cp.DR(k, i, j, l, m)), i, j, k, l, m);
            // second Bianchi: cyclic in (i, j, m)
            d_second.record(std::abs(d + cp.DR(j, m, k, l, i) + cp.DR(m, i, k, l, j)), i, j, k, l, m);
          }
        }

  std::vector<std::string> out;
  auto report = [&](const Violation& v, const char* name) {
    if (v.worst > tol) out.push_back(std::string(name) + " at " + v.where);
  };
  report(anti_first, "antisymmetry in the first pair");
  report(anti_second, "antisymmetry in the second pair");
  report(pair, "pair symmetry");
  report(bianchi, "first Bianchi identity");
  report(d_anti, "derivative antisymmetry");
  report(d_pair, "derivative pair symmetry");
  report(d_bianchi, "derivative first Bianchi identity");
  report(d_second, "second Bianchi identity");
  return out;
}

Eigen::MatrixXd jacobi(const CurvaturePoint& cp, const Eigen::VectorXd& u) {
  check_unit(cp, u);
  const int n = cp.dim();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double w = u[i] * u[k];
      if (w == 0.0) continue;
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) m(j, l) += w * cp.R(i, j, k, l);
    }
  return m;
}

Eigen::MatrixXd djacobi(const CurvaturePoint& cp, const Eigen::VectorXd& u) {
  check_unit(cp, u);
  const int n = cp.dim();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  if (!cp.has_derivative()) return m;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < n; ++p) {
        const double w = u[i] * u[k] * u[p];
        if (w == 0.0) continue;
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l) m(j, l) += w * cp.DR(i, j, k, l, p);
      }
  return m;
}

Eigen::MatrixXd ricci(const CurvaturePoint& cp) {
  const int n = cp.dim();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) ric(i, k) += cp.R(i, j, k, j);
  return ric;
}

double q_bracket(const CurvaturePoint& cp, const Eigen::MatrixXd& f, const Eigen::MatrixXd& g) {
  // sum_i <R(e_i, F^T e_j) G e_i, e_j>, expanded in components
  const int n = cp.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += cp.R(i, j, k, l) * g(k, i) * f(j, l);
  return s;
}

double q0_at(const CurvaturePoint& cp, const Eigen::VectorXd& u) {
  const Eigen::MatrixXd ru = jacobi(cp, u);
  return q_bracket(cp, ru, ru);
}

double t2_at(const CurvaturePoint& cp, const Eigen::VectorXd& u) {
  const Eigen::MatrixXd d = djacobi(cp, u);
  return (d * d).trace();
}

} // namespace harmonic::curvio
