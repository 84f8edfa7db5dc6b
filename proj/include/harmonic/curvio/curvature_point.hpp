#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace harmonic::curvio {

/// Curvature data at a point in an orthonormal frame.
///
/// R(i,j,k,l) = <R(e_i,e_j)e_k, e_l> with the sign for which a round sphere
/// of curvature kappa > 0 has Jacobi operator R_u = kappa on u-perp.
/// DR(i,j,k,l,m) = (nabla_{e_m} R)(e_i,e_j,e_k,e_l). A point without
/// derivative data is treated as having nabla R = 0.
class CurvaturePoint {
public:
  explicit CurvaturePoint(int n);

  int dim() const { return n_; }

  double& R(int i, int j, int k, int l) { return r_[index(i, j, k, l)]; }
  double R(int i, int j, int k, int l) const { return r_[index(i, j, k, l)]; }

  bool has_derivative() const { return !dr_.empty(); }
  /// Allocates zeroed derivative storage if absent.
  void enable_derivative();
  double& DR(int i, int j, int k, int l, int m);
  double DR(int i, int j, int k, int l, int m) const {
    return dr_.empty() ? 0.0 : dr_[index(i, j, k, l) * std::size_t(n_) + std::size_t(m)];
  }

  std::span<const double> curvature_data() const { return r_; }
  std::span<const double> derivative_data() const { return dr_; }

  /// Sets R(i,j,k,l) together with every entry forced by the pair symmetries.
  void set_symmetric(int i, int j, int k, int l, double value);

private:
  std::size_t index(int i, int j, int k, int l) const {
    return ((std::size_t(i) * n_ + j) * n_ + k) * n_ + l;
  }

  int n_;
  std::vector<double> r_;
  std::vector<double> dr_;
};

/// Names of violated algebraic identities (empty when all hold within tol).
std::vector<std::string> validate(const CurvaturePoint& cp, double tol = 1e-10);

/// Jacobi operator R_u = R(u, .)u as a symmetric matrix.
Eigen::MatrixXd jacobi(const CurvaturePoint& cp, const Eigen::VectorXd& u);

/// R'_u = (nabla_u R)(u, .)u.
Eigen::MatrixXd djacobi(const CurvaturePoint& cp, const Eigen::VectorXd& u);

/// Ricci tensor Ric(i,k) = sum_j R(i,j,k,j).
Eigen::MatrixXd ricci(const CurvaturePoint& cp);

/// sum_i Tr(F o R(e_i, .) G e_i) for arbitrary endomorphisms F and G.
double q_bracket(const CurvaturePoint& cp, const Eigen::MatrixXd& f, const Eigen::MatrixXd& g);

/// Pointwise Q0(u) = sum_i Tr(R_u o R(e_i, .) R_u e_i).
double q0_at(const CurvaturePoint& cp, const Eigen::VectorXd& u);

/// Pointwise T2(u) = Tr(R'_u R'_u).
double t2_at(const CurvaturePoint& cp, const Eigen::VectorXd& u);

} // namespace harmonic::curvio
