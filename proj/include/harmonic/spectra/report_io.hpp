#pragma once

#include "harmonic/curvio/invariants.hpp"
#include "harmonic/spectra/heat.hpp"

#include <iosfwd>
#include <string>

namespace harmonic::spectra {

// Flat key/value text: one `key = value` per line. Series coefficients use
// keys `<series>.r^<power>` and `<series>.truncation`.
void write_text(std::ostream& os, const HeatReport& r);
void write_text(std::ostream& os, const Comparison& c);
void write_text(std::ostream& os, const curvio::InvariantReport& r);

// Structured JSON with the same keys; series are objects
// {"truncation": k, "coefficients": [[power, value], ...]}.
std::string to_json(const HeatReport& r);
std::string to_json(const Comparison& c);
std::string to_json(const curvio::InvariantReport& r);
/// {"a": ..., "b": ..., "comparison": ...}
std::string to_json(const HeatReport& a, const HeatReport& b, const Comparison& c);

} // namespace harmonic::spectra
