#pragma once

#include "harmonic/curvio/curvature_point.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace harmonic::curvio {

struct InvariantReport {
  int n = 0;
  double C = 0.0;              ///< Einstein constant (mean Ricci eigenvalue)
  double scal = 0.0;           ///< n C
  double H = 0.0;              ///< Tr(R_u R_u), averaged over sampled u
  double L = 0.0;              ///< Tr(32 R_u^3 - 9 R'_u R'_u), averaged over sampled u
  double normR2 = 0.0;         ///< |R|^2
  double normDR2 = 0.0;        ///< |nabla R|^2
  double Rhat = 0.0;           ///< sum R_ijkl R_klab R_abij
  double rcirc = 0.0;          ///< sum R_ijkl R_jalb R_aibk
  double ricci_deviation = 0.0;  ///< max |Ric - C Id|
  double h_spread = 0.0;       ///< max |Tr(R_u R_u) - H| over the samples
  double l_spread = 0.0;       ///< max |Tr(32 R_u^3 - 9 R'_u R'_u) - L| over the samples
  int halton_samples = 0;
  int uniform_samples = 0;
  bool einstein = false;       ///< ricci_deviation <= tol
};

struct InvariantOptions {
  double tol = 1e-9;
  int samples = 500;           ///< per sampler (Halton and seeded uniform)
  std::uint64_t seed = 0;
};

InvariantReport invariants(const CurvaturePoint& cp, const InvariantOptions& opts = {});

double norm_r2(const CurvaturePoint& cp);
double norm_dr2(const CurvaturePoint& cp);
double r_hat(const CurvaturePoint& cp);
double r_circ(const CurvaturePoint& cp);

struct IdentityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

/// The pointwise curvature identities every harmonic space satisfies:
///   frame form    <R(x,.).,R(y,.).> = (2/3)((n+2)H - C^2) <x,y>
///   norm          |R|^2 = (2/3) n ((n+2)H - C^2)
///   sixth order   32(nC^3 + (9/2)C|R|^2 + (7/2)Rhat - rcirc) - 27|nabla R|^2 = n(n+2)(n+4)L
///   lichnerowicz  2C|R|^2 - Rhat - 4 rcirc + |nabla R|^2 = 0
///   a-contractions  (sum A_aabb, sum A_abab, sum A_abba) = (nC^3, rcirc, rcirc - Rhat/4)
/// Comparisons are relative: |lhs - rhs| <= tol * max(1, |lhs|, |rhs|).
std::vector<IdentityCheck> harmonic_identity_suite(const CurvaturePoint& cp, const InvariantReport& rep,
                                                   double tol = 1e-9);

bool close(double a, double b, double tol);

} // namespace harmonic::curvio
