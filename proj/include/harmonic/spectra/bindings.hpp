#pragma once

#include "harmonic/curvio/invariants.hpp"
#include "harmonic/jets/scalar.hpp"
#include "harmonic/spectra/radial_series.hpp"

namespace harmonic::spectra {

enum class ResidualPolicy { reject, zero };

/// Values substituted for the scalar generators when a symbolic series is
/// averaged over the unit sphere of directions.
struct Bindings {
  int n = 0;
  double C = 0.0;
  double H = 0.0;
  double L = 0.0;
  double mean_T2 = 0.0;  ///< 3|nabla R|^2 / (n(n+2)(n+4))
  double mean_Q0 = 0.0;  ///< (nC^3 + 2 rcirc - Rhat/4) / (n(n+2))
  ResidualPolicy policy = ResidualPolicy::reject;
};

Bindings flat_bindings(int n);

/// Bindings from directly contracted invariants.
Bindings bindings_from_report(const curvio::InvariantReport& rep, ResidualPolicy policy = ResidualPolicy::reject);

/// Bindings of a harmonic space known only through (n, C, H, L, |nabla R|^2):
/// rcirc and Rhat are recovered from the sixth-order and Lichnerowicz identities.
Bindings harmonic_bindings(int n, double C, double H, double L, double norm_dr2,
                           ResidualPolicy policy = ResidualPolicy::reject);

/// Sphere mean of a symbolic series, coefficient by coefficient.
///
/// Direction-dependent generators enter linearly through mean_T2 and mean_Q0.
/// A residual trace monomial with an odd number of radial derivatives is odd
/// under u -> -u and averages to zero. Any other residual follows the policy;
/// under `reject` it throws std::domain_error. Products of two or more
/// direction-dependent factors have no binding and always throw.
RadialScalarSeries evaluate(const jets::ScalarSeries& s, const Bindings& b);

double evaluate(const jets::ScalarPolynomial& p, const Bindings& b);

} // namespace harmonic::spectra
