#pragma once

#include "harmonic/curvio/curvature_point.hpp"
#include "harmonic/rational.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace harmonic::curvio {

/// Volume of the unit sphere S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
double sphere_volume(int n);

/// Integral of prod u_i^{e_i} over S^{n-1} as a rational multiple of the
/// sphere volume. Zero when some exponent is odd.
Rational sphere_moment(int n, std::span<const int> exponents);

/// Integral of u_a u_b u_c u_d over S^{n-1} in units of the sphere volume.
Rational fourth_moment(int n, const std::array<int, 4>& pattern);

/// Closed-form sphere mean of T2(u): 3|nabla R|^2 / (n(n+2)(n+4)).
double sphere_average_T2(const CurvaturePoint& cp);

/// Closed-form sphere mean of Q0(u): (nC^3 + 2 rcirc - Rhat/4) / (n(n+2)), C from the Ricci trace.
double sphere_average_Q0(const CurvaturePoint& cp);

/// Exact mean of T2(u) from sixth moments of its coefficient polynomial.
double exact_mean_T2(const CurvaturePoint& cp);

/// Exact mean of Q0(u) = sum A_abcd u_a u_b u_c u_d from fourth moments.
double exact_mean_Q0(const CurvaturePoint& cp);

/// A_abcd = sum R_ijkl R_aibk R_cjdl as a dense n^4 array.
std::vector<double> a_tensor(const CurvaturePoint& cp);

/// (sum A_aabb, sum A_abab, sum A_abba).
std::array<double, 3> a_contractions(const CurvaturePoint& cp);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int samples = 0;
};

/// Seeded uniform sampling on the unit sphere. Samples are drawn in fixed
/// blocks with per-block derived seeds and summed in block order.
MonteCarloEstimate monte_carlo_T2(const CurvaturePoint& cp, int samples, std::uint64_t seed);
MonteCarloEstimate monte_carlo_Q0(const CurvaturePoint& cp, int samples, std::uint64_t seed);

/// Uniform unit vectors, deterministic in (seed, count).
std::vector<Eigen::VectorXd> uniform_directions(int n, int count, std::uint64_t seed);

/// Halton points pushed through the inverse normal CDF and normalized.
std::vector<Eigen::VectorXd> halton_directions(int n, int count);

} // namespace harmonic::curvio
