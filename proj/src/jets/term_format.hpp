#pragma once

#include "harmonic/rational.hpp"

#include <sstream>
#include <string>

namespace harmonic::jets::detail {

// Appends `c*body` to a signed sum, folding unit coefficients.
inline void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& body) {
  const bool negative = c < 0;
  const Rational mag = negative ? Rational(-c) : c;
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  if (body.empty()) {
    os << harmonic::to_string(mag);
  } else if (mag == 1) {
    os << body;
  } else {
    os << harmonic::to_string(mag) << "*" << body;
  }
}

} // namespace harmonic::jets::detail
