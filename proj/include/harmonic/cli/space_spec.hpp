#pragma once

#include "harmonic/curvio/curvature_point.hpp"
#include "harmonic/models/models.hpp"
#include "harmonic/rational.hpp"

#include <string>

namespace harmonic::cli {

/// A model space named on the command line:
///   flat:n=<int>
///   form:n=<int>,k=<rational>
///   dr:q=<int>,p=<int>,m=<int>     (q = 3: p, m copies of the two Cl(3) modules)
///   dr:q=<int>,p=<int>             (q = 1, 2, 7)
///   dr:q=0,n=<int>                 (real hyperbolic, curvature -1/4)
struct SpaceSpec {
  enum class Kind { flat, form, damek_ricci };

  Kind kind = Kind::flat;
  int n = 0;                       ///< dimension for flat, form and q = 0
  Rational kappa = 0;              ///< curvature of a space form
  models::CliffordModuleSpec module;

  /// Throws std::invalid_argument with a description of the problem.
  static SpaceSpec parse(const std::string& text);

  /// Canonical form; parse(to_string()) == *this.
  std::string to_string() const;

  int dimension() const;
  curvio::CurvaturePoint build() const;

  friend bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
    return a.kind == b.kind && a.n == b.n && a.kappa == b.kappa && a.module.q == b.module.q &&
           a.module.a_plus == b.module.a_plus && a.module.a_minus == b.module.a_minus;
  }
};

/// True if the text looks like a space spec rather than a file path.
bool looks_like_spec(const std::string& text);

} // namespace harmonic::cli
