#pragma once

#include "harmonic/curvio/curvature_point.hpp"

#include <Eigen/Dense>

#include <vector>

namespace harmonic::models {

/// Clifford module data for an H-type algebra with center of dimension q.
/// For q = 3 the module is a_plus copies of one irreducible Cl(3) module and
/// a_minus copies of the other; for other q only a_plus is used. For the
/// degenerate q = 0 case, a_plus is the dimension of the abelian part v.
struct CliffordModuleSpec {
  int q = 1;
  int a_plus = 1;
  int a_minus = 0;
};

/// J_1, ..., J_q on v: skew, J_a^2 = -Id, J_a J_b + J_b J_a = 0 for a != b.
/// Supported q: 1, 2, 3, 7. Throws std::invalid_argument otherwise.
std::vector<Eigen::MatrixXd> clifford_module(const CliffordModuleSpec& spec);

/// Lie algebra with an orthonormal basis; c(i,j,k) = <[e_i, e_j], e_k>.
class MetricLieAlgebra {
public:
  explicit MetricLieAlgebra(int dim);

  int dim() const { return dim_; }
  double c(int i, int j, int k) const { return c_[index(i, j, k)]; }
  /// Sets c(i,j,k) and c(j,i,k) = -value.
  void set_bracket(int i, int j, int k, double value);

  /// Largest component of the Jacobiator [[e_i,e_j],e_k] + cyclic.
  double jacobi_residual() const;

private:
  std::size_t index(int i, int j, int k) const { return (std::size_t(i) * dim_ + j) * dim_ + k; }
  int dim_;
  std::vector<double> c_;
};

/// Solvable extension a + v + z with basis order (A, v, z):
///   [x, y] = sum_a <J_a x, y> z_a,  [A, x] = x/2,  [A, z] = z.
/// q = 0 gives real hyperbolic space of curvature -1/4.
/// Throws std::runtime_error if the Jacobi identity fails.
MetricLieAlgebra damek_ricci(const CliffordModuleSpec& spec);

/// Curvature and its covariant derivative at the identity for the
/// left-invariant metric. Throws std::runtime_error if the output fails
/// curvio::validate.
curvio::CurvaturePoint curvature_point(const MetricLieAlgebra& g);

/// R_ijkl = kappa (d_ik d_jl - d_il d_jk), nabla R = 0.
curvio::CurvaturePoint space_form(int n, double kappa);

} // namespace harmonic::models
