#pragma once

#include "harmonic/jets/endo.hpp"

namespace harmonic::jets {

/// Parallel-transported shape operator of the geodesic sphere along the
/// radial geodesic, as a series in r through r^order:
///   sigma_u(r) = (1/r) I_u - (r/3) R_u - (r^2/4) R'_u - ...
/// The Taylor coefficients of C_u(r) = r sigma_u(r) follow from Ledger's
/// recursion with C^(0) = I_u and C^(1) = 0; on u-perp the l = 0 and l = k
/// terms combine to (k+1) C^(k) = -k(k-1) R^(k-2) - sum_{l=1}^{k-1} binom(k,l) C^(l) C^(k-l).
EndoSeries ledger_series(int order);

/// Jacobi operator R_nu along the geodesic: sum_k r^k/k! R_u^(k), through r^order.
EndoSeries jacobi_series(int order);

/// sigma' + sigma^2 + R_nu, known through r^order. Zero when the recursion is right.
EndoSeries riccati_residual(int order);

} // namespace harmonic::jets
