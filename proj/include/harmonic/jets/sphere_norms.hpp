#pragma once

#include "harmonic/jets/scalar.hpp"

namespace harmonic::jets {

/// |Ric^S|^2 at exp(ru) on the geodesic sphere, through r^order:
///   (n-1)C^2 + 2C (Tr s)^2 + (Tr s)^2 Tr(s^2) + 2C Tr(s') + 2 Tr(s) Tr(s s') + Tr(s' s').
ScalarSeries ricS_norm_series(int order = 2);

/// |R^S|^2 at exp(ru), through r^order:
///   (2/3)(n-4)((n+2)H - C^2) + 4H + 2 (Tr s^2)^2 - 2 Tr(s^4) + 4 Q(s, s).
ScalarSeries rS_norm_series(int order = 2);

/// Pieces of the boundary integrand of the ball heat invariant a_2.
struct BallIntegrands {
  ScalarSeries jacobi_sigma;      ///< Tr(R_nu o sigma)
  ScalarSeries sigma_cubed;       ///< Tr(sigma^3)
  ScalarSeries sigma_sigma2;      ///< Tr(sigma) Tr(sigma^2)
};

BallIntegrands ball_integrand_series(int order = 3);

/// Tr(sigma) and Tr(sigma^2) through r^order.
ScalarSeries trace_sigma_series(int order);
ScalarSeries trace_sigma2_series(int order);

} // namespace harmonic::jets
