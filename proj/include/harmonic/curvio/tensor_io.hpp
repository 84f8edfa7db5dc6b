#pragma once

#include "harmonic/curvio/curvature_point.hpp"

#include <iosfwd>
#include <string>

namespace harmonic::curvio {

// Text format, whitespace separated, '#' starts a comment:
//
//   n <dim>
//   R
//   i j k l value        (0-based, nonzero components only)
//   ...
//   DR
//   i j k l m value
//   ...
//
// The DR block is optional.

void write_curvature_point(std::ostream& os, const CurvaturePoint& cp);

/// Throws std::runtime_error naming the offending line.
CurvaturePoint read_curvature_point(std::istream& is);

CurvaturePoint load_curvature_point(const std::string& path);
void save_curvature_point(const std::string& path, const CurvaturePoint& cp);

} // namespace harmonic::curvio
