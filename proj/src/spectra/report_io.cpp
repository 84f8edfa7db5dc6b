#include "harmonic/spectra/report_io.hpp"

#include "json.hpp"

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace harmonic::spectra {

namespace {

using nlohmann::ordered_json;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::pair<std::string, const RadialScalarSeries*>> series_fields(const HeatReport& r) {
  return {{"sphere.a0", &r.a0},
          {"sphere.a1", &r.a1},
          {"sphere.a2", &r.a2},
          {"sphere.a2_over_a0", &r.a2_density},
          {"sphere.curvature_gap", &r.curvature_gap},
          {"ball.a0", &r.ball_a0},
          {"ball.a0.5_dirichlet", &r.ball_a05_dirichlet},
          {"ball.a2_dirichlet", &r.ball_a2_dirichlet},
          {"ball.a2_neumann", &r.ball_a2_neumann},
          {"ball.boundary_density_dirichlet", &r.ball_density_dirichlet},
          {"ball.boundary_density_neumann", &r.ball_density_neumann}};
}

void write_series(std::ostream& os, const std::string& key, const RadialScalarSeries& s) {
  os << key << ".truncation = " << s.truncation() << '\n';
  for (const auto& [p, c] : s.coeffs()) os << key << ".r^" << p << " = " << num(c) << '\n';
}

ordered_json series_json(const RadialScalarSeries& s) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& [p, c] : s.coeffs()) coeffs.push_back({p, c});
  return ordered_json{{"truncation", s.truncation()}, {"coefficients", coeffs}};
}

ordered_json report_json(const HeatReport& r) {
  ordered_json j;
  j["label"] = r.label;
  j["n"] = r.n;
  j["C"] = r.C;
  j["H"] = r.H;
  j["L"] = r.L;
  j["norm_nabla_R2"] = r.norm_dr2;
  j["sphere_order"] = r.sphere_order;
  j["ball_order"] = r.ball_order;
  ordered_json series;
  for (const auto& [key, s] : series_fields(r)) series[key] = series_json(*s);
  j["series"] = series;
  j["distinguisher_sphere"] = r.d_sphere;
  j["distinguisher_dirichlet"] = r.d_dirichlet;
  j["distinguisher_neumann"] = r.d_neumann;
  return j;
}

ordered_json comparison_json(const Comparison& c) {
  return ordered_json{{"verdict", to_string(c.verdict)},
                      {"delta_C", c.delta_C},
                      {"delta_H", c.delta_H},
                      {"delta_L", c.delta_L},
                      {"delta_norm_nabla_R2", c.delta_norm_dr2},
                      {"delta_sphere_r2", c.delta_sphere_r2},
                      {"delta_dirichlet_r3", c.delta_dirichlet_r3},
                      {"delta_neumann_r3", c.delta_neumann_r3}};
}

ordered_json invariants_json(const curvio::InvariantReport& r) {
  return ordered_json{{"n", r.n},
                      {"C", r.C},
                      {"scal", r.scal},
                      {"H", r.H},
                      {"L", r.L},
                      {"norm_R2", r.normR2},
                      {"norm_nabla_R2", r.normDR2},
                      {"R_hat", r.Rhat},
                      {"rho_check", r.rcirc},
                      {"ricci_deviation", r.ricci_deviation},
                      {"H_spread", r.h_spread},
                      {"L_spread", r.l_spread},
                      {"halton_samples", r.halton_samples},
                      {"uniform_samples", r.uniform_samples},
                      {"einstein", r.einstein}};
}

} // namespace

void write_text(std::ostream& os, const HeatReport& r) {
  os << "label = " << r.label << '\n'
     << "n = " << r.n << '\n'
     << "C = " << num(r.C) << '\n'
     << "H = " << num(r.H) << '\n'
     << "L = " << num(r.L) << '\n'
     << "norm_nabla_R2 = " << num(r.norm_dr2) << '\n'
     << "sphere_order = " << r.sphere_order << '\n'
     << "ball_order = " << r.ball_order << '\n';
  for (const auto& [key, s] : series_fields(r)) write_series(os, key, *s);
  os << "distinguisher_sphere = " << num(r.d_sphere) << '\n'
     << "distinguisher_dirichlet = " << num(r.d_dirichlet) << '\n'
     << "distinguisher_neumann = " << num(r.d_neumann) << '\n';
}

void write_text(std::ostream& os, const Comparison& c) {
  const ordered_json j = comparison_json(c);
  for (const auto& [key, value] : j.items()) {
    os << key << " = ";
    if (value.is_string())
      os << value.get<std::string>();
    else
      os << num(value.get<double>());
    os << '\n';
  }
}

void write_text(std::ostream& os, const curvio::InvariantReport& r) {
  const ordered_json j = invariants_json(r);
  for (const auto& [key, value] : j.items()) {
    os << key << " = ";
    if (value.is_boolean())
      os << (value.get<bool>() ? "true" : "false");
    else if (value.is_number_integer())
      os << value.get<long>();
    else
      os << num(value.get<double>());
    os << '\n';
  }
}

std::string to_json(const HeatReport& r) { return report_json(r).dump(2); }
std::string to_json(const Comparison& c) { return comparison_json(c).dump(2); }
std::string to_json(const curvio::InvariantReport& r) { return invariants_json(r).dump(2); }

std::string to_json(const HeatReport& a, const HeatReport& b, const Comparison& c) {
  ordered_json j{{"a", report_json(a)}, {"b", report_json(b)}, {"comparison", comparison_json(c)}};
  return j.dump(2);
}

} // namespace harmonic::spectra
