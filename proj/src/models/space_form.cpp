#include "harmonic/models/models.hpp"

#include <stdexcept>

namespace harmonic::models {

curvio::CurvaturePoint space_form(int n, double kappa) {
  if (n < 2) throw std::invalid_argument("space form needs n >= 2");
  curvio::CurvaturePoint cp(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      cp.R(i, j, i, j) = kappa;
      cp.R(i, j, j, i) = -kappa;
    }
  return cp;
}

} // namespace harmonic::models
