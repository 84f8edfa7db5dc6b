#pragma once

#include "harmonic/spectra/bindings.hpp"
#include "harmonic/spectra/radial_series.hpp"

#include <string>

namespace harmonic::spectra {

enum class Boundary { dirichlet, neumann };

/// Sphere-area density v(r) = r^{n-1} theta(r) from v'/v = Tr(sigma), with
/// theta known through r^order.
RadialScalarSeries volume_series(const Bindings& b, int order);

/// Integral of v from 0 to r.
RadialScalarSeries ball_volume_series(const Bindings& b, int order);

/// Scalar curvature of the geodesic sphere, (n-1)C + v''/v, through r^order.
RadialScalarSeries scalS_series(const Bindings& b, int order);

/// Same quantity from the Gauss equation (n-2)C + (Tr sigma)^2 - Tr(sigma^2).
RadialScalarSeries scalS_series_gauss(const Bindings& b, int order);

/// a_1(S_r) = (1/6) a_0 scal^S, with a_0 = omega v. Relative order as for v.
RadialScalarSeries a1_series(const Bindings& b, int order);
RadialScalarSeries a1_series_gauss(const Bindings& b, int order);

/// Mean over S_r of |R^S|^2 - |Ric^S|^2 through r^order.
RadialScalarSeries sphere_curvature_gap(const Bindings& b, int order = 2);

/// a_2(S_r)/a_0(S_r) = (1/360)(5 scal^2 - 2 mean|Ric^S|^2 + 2 mean|R^S|^2) through r^order.
RadialScalarSeries a2_sphere_density(const Bindings& b, int order = 2);

/// a_2(S_r) = omega v a2_sphere_density.
RadialScalarSeries a2_sphere_series(const Bindings& b, int order = 2);

/// r^2 coefficient of sphere_curvature_gap minus its value for the harmonic
/// bindings with the same (n, C, H, L) and nabla R = 0.
double distinguisher_sphere(const Bindings& b);

/// Mean over S_r of the boundary integrand of a_2 on the ball:
///   (20nC - 8C) Tr s + 16 Tr(R_nu s) + d1 (Tr s)^3 + d2 Tr s Tr s^2 + d3 Tr s^3
/// with (d1, d2, d3) = (40/21, -88/7, 320/21) or (40/3, 8, 32/3). Through r^order.
RadialScalarSeries ball_boundary_density(const Bindings& b, Boundary bc, int order = 3);

/// a_2(B_r) = omega [ I vol-density + (1/360) v M ], I the constant interior integrand.
RadialScalarSeries a2_ball_series(const Bindings& b, Boundary bc, int order = 3);

/// a_2(B_r)/a_0(B_r).
RadialScalarSeries a2_ball_quotient(const Bindings& b, Boundary bc, int order = 3);

/// a_{0.5}(B_r) = -(sqrt(pi)/2) vol(S_r) for Dirichlet, the negative for Neumann.
RadialScalarSeries a05_ball_series(const Bindings& b, Boundary bc, int order = 3);

/// r^3 coefficient of ball_boundary_density minus its value for the harmonic
/// bindings with the same (n, C, H, L) and nabla R = 0.
double distinguisher_ball(const Bindings& b, Boundary bc);

struct HeatOptions {
  int sphere_order = 2;
  int ball_order = 3;
};

struct HeatReport {
  std::string label;
  int n = 0;
  double C = 0.0, H = 0.0, L = 0.0, norm_dr2 = 0.0;
  int sphere_order = 2, ball_order = 3;

  RadialScalarSeries a0, a1, a2;        ///< geodesic sphere heat invariants
  RadialScalarSeries a2_density;        ///< a2 / a0 on the sphere
  RadialScalarSeries curvature_gap;     ///< mean(|R^S|^2 - |Ric^S|^2)
  RadialScalarSeries ball_a0, ball_a05_dirichlet;
  RadialScalarSeries ball_a2_dirichlet, ball_a2_neumann;
  RadialScalarSeries ball_density_dirichlet, ball_density_neumann;

  double d_sphere = 0.0, d_dirichlet = 0.0, d_neumann = 0.0;
};

HeatReport heat_report(const std::string& label, const Bindings& b, double norm_dr2, const HeatOptions& opts = {});

enum class Verdict { dimension_mismatch, chl_mismatch, nabla_r_mismatch, indistinguishable };

std::string to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::indistinguishable;
  double delta_C = 0.0, delta_H = 0.0, delta_L = 0.0, delta_norm_dr2 = 0.0;
  double delta_sphere_r2 = 0.0;     ///< r^2 coefficient of the curvature gap
  double delta_dirichlet_r3 = 0.0;  ///< r^3 coefficient of the Dirichlet boundary density
  double delta_neumann_r3 = 0.0;
};

/// Differences are a - b.
Comparison compare(const HeatReport& a, const HeatReport& b, double tol);

} // namespace harmonic::spectra
