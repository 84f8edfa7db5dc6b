#pragma once

#include "harmonic/jets/endo.hpp"
#include "harmonic/jets/scalar.hpp"

namespace harmonic::jets {

// Trace reduction in a harmonic space. Words are brought to cyclic normal form
// and matched against the identities satisfied by the Jacobi operator:
//
//   Tr(I_u) = n - 1        Tr(R_u) = C        Tr(R_u^(k)) = 0   (k >= 1)
//   Tr(R R) = H            Tr(R R') = 0       Tr(R R'') = -T2   Tr(R' R') = T2
//   Tr(R R R) = (L + 9 T2) / 32
//
// Anything else is kept as a residual generator.
ScalarPolynomial reduce_trace(const EndoWord& w);

/// Q_k(F, G) with the contraction rules
///   Q_k(F, I_u) = [k = 0] C Tr(F) - Tr(F R_u^(k)),   Q_0(R_u, R_u) = Q0,
/// every other pair kept as a residual bracket.
ScalarPolynomial reduce_q(int order, const EndoWord& left, const EndoWord& right);

ScalarPolynomial trace(const EndoPolynomial& p);

ScalarSeries series_trace(const EndoSeries& s);

/// sum_i Tr(a o R(e_i, .) b e_i) along the geodesic, where the curvature
/// tensor contributes sum_k r^k/k! R^(k).
ScalarSeries q_contract(const EndoSeries& a, const EndoSeries& b);

} // namespace harmonic::jets
