#include "harmonic/cli/commands.hpp"

#include "harmonic/cli/space_spec.hpp"
#include "harmonic/curvio/averages.hpp"
#include "harmonic/curvio/invariants.hpp"
#include "harmonic/curvio/tensor_io.hpp"
#include "harmonic/jets/ledger.hpp"
#include "harmonic/jets/sphere_norms.hpp"
#include "harmonic/jets/trace.hpp"
#include "harmonic/spectra/bindings.hpp"
#include "harmonic/spectra/heat.hpp"
#include "harmonic/spectra/report_io.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace harmonic::cli {

namespace {

using nlohmann::ordered_json;

struct Loaded {
  std::string label;
  curvio::CurvaturePoint cp;
};

/// Spec or tensor file. Throws std::invalid_argument for an unparsable
/// spec, std::runtime_error for file problems.
Loaded load_space(const std::string& text) {
  if (looks_like_spec(text)) {
    const SpaceSpec spec = SpaceSpec::parse(text);
    return {spec.to_string(), spec.build()};
  }
  if (!std::filesystem::exists(text))
    throw std::invalid_argument("'" + text + "' is neither a space spec nor an existing tensor file");
  return {text, curvio::load_curvature_point(text)};
}

struct Target {
  int default_order;
  int max_order;
};

const std::map<std::string, Target>& expand_targets() {
  static const std::map<std::string, Target> targets = {
      {"sigma", {5, 12}}, {"trace", {5, 12}}, {"sigma2", {4, 12}}, {"sigma4", {2, 8}},
      {"ricS", {2, 6}},   {"rS", {2, 6}},     {"ball", {3, 6}}};
  return targets;
}

template <class Series>
ordered_json series_json(const Series& s) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& [p, c] : s.coeffs()) coeffs.push_back({{"power", p}, {"value", c.to_string()}});
  ordered_json j{{"coefficients", coeffs}};
  if (!s.is_exact()) j["truncation"] = s.truncation();
  return j;
}

template <class Series>
void print_series(std::ostream& out, const std::string& name, const Series& s) {
  out << name << ":\n";
  for (const auto& [p, c] : s.coeffs()) out << "  r^" << p << ": " << c.to_string() << '\n';
  if (!s.is_exact()) out << "  + O(r^" << s.truncation() + 1 << ")\n";
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Check {
  std::string name;
  bool pass;
  double lhs;
  double rhs;
};

} // namespace

int cmd_expand(const std::string& target, const Options& opts, std::ostream& out, std::ostream& err) {
  const auto& targets = expand_targets();
  const auto it = targets.find(target);
  if (it == targets.end()) {
    err << "unknown expand target '" << target << "' (expected sigma, sigma2, sigma4, trace, ricS, rS or ball)\n";
    return kExitUsage;
  }
  const int order = opts.order.value_or(it->second.default_order);
  if (order < 0 || order > it->second.max_order) {
    err << "order " << order << " for '" << target << "' must lie in [0, " << it->second.max_order << "]\n";
    return kExitUsage;
  }

  std::vector<std::pair<std::string, ordered_json>> json_parts;
  auto emit = [&](const std::string& name, const auto& series) {
    if (opts.json)
      json_parts.emplace_back(name, series_json(series));
    else
      print_series(out, name, series);
  };

  if (target == "sigma") {
    emit("sigma", jets::ledger_series(order));
  } else if (target == "trace") {
    emit("tr(sigma)", jets::trace_sigma_series(order));
  } else if (target == "sigma2") {
    emit("tr(sigma^2)", jets::trace_sigma2_series(order));
  } else if (target == "sigma4") {
    const jets::EndoSeries s = jets::ledger_series(order + 3);
    const jets::EndoSeries s2 = s * s;
    emit("tr(sigma^4)", jets::series_trace(s2 * s2).truncated(order));
  } else if (target == "ricS") {
    emit("|Ric^S|^2", jets::ricS_norm_series(order));
  } else if (target == "rS") {
    emit("|R^S|^2", jets::rS_norm_series(order));
  } else {
    const jets::BallIntegrands b = jets::ball_integrand_series(order);
    emit("tr(R_nu sigma)", b.jacobi_sigma);
    emit("tr(sigma^3)", b.sigma_cubed);
    emit("tr(sigma) tr(sigma^2)", b.sigma_sigma2);
  }

  if (opts.json) {
    ordered_json j{{"target", target}, {"order", order}};
    ordered_json series;
    for (auto& [name, s] : json_parts) series[name] = std::move(s);
    j["series"] = std::move(series);
    out << j.dump(2) << '\n';
  }
  return kExitPass;
}

int cmd_verify(const std::string& space, const Options& opts, std::ostream& out, std::ostream& err) {
  std::optional<Loaded> loaded;
  try {
    loaded.emplace(load_space(space));
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "cannot load " << space << ": " << e.what() << '\n';
    return kExitFail;
  }
  const curvio::CurvaturePoint& cp = loaded->cp;
  const double tol = opts.tol;
  std::vector<Check> checks;

  const auto violations = curvio::validate(cp, std::min(tol, 1e-10));
  for (const auto& v : violations) checks.push_back({"symmetry: " + v, false, 0.0, 0.0});
  if (violations.empty()) checks.push_back({"symmetries", true, 0.0, 0.0});

  curvio::InvariantOptions iopts;
  iopts.tol = tol;
  iopts.seed = opts.seed;
  const curvio::InvariantReport rep = curvio::invariants(cp, iopts);
  checks.push_back({"einstein", rep.einstein, rep.ricci_deviation, 0.0});
  checks.push_back({"H constant over directions", rep.h_spread <= tol * std::max(1.0, std::abs(rep.H)), rep.h_spread, 0.0});
  checks.push_back({"L constant over directions", rep.l_spread <= tol * std::max(1.0, std::abs(rep.L)), rep.l_spread, 0.0});
  for (const auto& c : curvio::harmonic_identity_suite(cp, rep, tol)) checks.push_back({c.name, c.pass, c.lhs, c.rhs});

  const double t2 = curvio::sphere_average_T2(cp);
  const double q0 = curvio::sphere_average_Q0(cp);
  const double t2_exact = curvio::exact_mean_T2(cp);
  const double q0_exact = curvio::exact_mean_Q0(cp);
  checks.push_back({"mean T2 exact moments", curvio::close(t2_exact, t2, tol), t2_exact, t2});
  checks.push_back({"mean Q0 exact moments", curvio::close(q0_exact, q0, tol), q0_exact, q0});
  auto within = [&](const curvio::MonteCarloEstimate& e, double exact) {
    return std::abs(e.mean - exact) <= std::max(3.0 * e.std_error, tol * std::max(1.0, std::abs(exact)));
  };
  const auto mc_t2 = curvio::monte_carlo_T2(cp, opts.samples, opts.seed);
  const auto mc_q0 = curvio::monte_carlo_Q0(cp, opts.samples, opts.seed);
  checks.push_back({"mean T2 Monte Carlo", within(mc_t2, t2), mc_t2.mean, t2});
  checks.push_back({"mean Q0 Monte Carlo", within(mc_q0, q0), mc_q0.mean, q0});

  bool all = true;
  for (const auto& c : checks) all = all && c.pass;

  if (opts.json) {
    ordered_json list = ordered_json::array();
    for (const auto& c : checks) list.push_back({{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    out << ordered_json{{"space", loaded->label}, {"pass", all}, {"checks", list}}.dump(2) << '\n';
  } else {
    out << "space = " << loaded->label << '\n';
    for (const auto& c : checks)
      out << (c.pass ? "PASS " : "FAIL ") << c.name << "  lhs=" << num(c.lhs) << " rhs=" << num(c.rhs) << '\n';
    out << (all ? "all checks passed" : "some checks failed") << '\n';
  }
  return all ? kExitPass : kExitFail;
}

int cmd_space(const std::string& space, const Options& opts, const std::string& write_tensor, std::ostream& out,
              std::ostream& err) {
  std::optional<Loaded> loaded;
  try {
    loaded.emplace(load_space(space));
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "cannot load " << space << ": " << e.what() << '\n';
    return kExitFail;
  }
  curvio::InvariantOptions iopts;
  iopts.tol = opts.tol;
  iopts.seed = opts.seed;
  const auto rep = curvio::invariants(loaded->cp, iopts);
  if (opts.json) {
    out << spectra::to_json(rep) << '\n';
  } else {
    out << "space = " << loaded->label << '\n';
    spectra::write_text(out, rep);
  }
  if (!write_tensor.empty()) {
    try {
      curvio::save_curvature_point(write_tensor, loaded->cp);
    } catch (const std::exception& e) {
      err << e.what() << '\n';
      return kExitFail;
    }
  }
  return kExitPass;
}

int cmd_compare(const std::string& a, const std::string& b, const Options& opts, std::ostream& out,
                std::ostream& err) {
  std::optional<Loaded> la, lb;
  try {
    la.emplace(load_space(a));
    lb.emplace(load_space(b));
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitFail;
  }

  spectra::HeatOptions hopts;
  hopts.sphere_order = opts.order.value_or(2);
  hopts.ball_order = std::max(3, opts.order.value_or(3));
  // Beyond r^3 the expansions involve traces such as Tr(R_u^4) that C, H, L
  // and the sphere means of T2 and Q0 do not determine.
  if (hopts.sphere_order < 0 || hopts.sphere_order > 3) {
    err << "order must lie in [0, 3]\n";
    return kExitUsage;
  }

  curvio::InvariantOptions iopts;
  iopts.tol = opts.tol;
  iopts.seed = opts.seed;
  auto report = [&](const Loaded& l) {
    const auto rep = curvio::invariants(l.cp, iopts);
    return spectra::heat_report(l.label, spectra::bindings_from_report(rep), rep.normDR2, hopts);
  };
  const spectra::HeatReport ra = report(*la);
  const spectra::HeatReport rb = report(*lb);
  const spectra::Comparison cmp = spectra::compare(ra, rb, opts.tol);

  if (opts.json) {
    out << spectra::to_json(ra, rb, cmp) << '\n';
    return kExitPass;
  }
  auto prefixed = [&](const std::string& prefix, auto&& write) {
    std::ostringstream buf;
    write(buf);
    std::istringstream lines(buf.str());
    for (std::string line; std::getline(lines, line);) out << prefix << line << '\n';
  };
  prefixed("a.", [&](std::ostream& os) { spectra::write_text(os, ra); });
  prefixed("b.", [&](std::ostream& os) { spectra::write_text(os, rb); });
  spectra::write_text(out, cmp);
  return kExitPass;
}

} // namespace harmonic::cli
