#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace harmonic::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  std::optional<int> order;   ///< unset: per-command default
  double tol = 1e-9;
  std::uint64_t seed = 0;
  bool json = false;
  int samples = 100000;       ///< Monte Carlo samples for verify
};

/// Targets: sigma, sigma2, sigma4, trace, ricS, rS, ball.
int cmd_expand(const std::string& target, const Options& opts, std::ostream& out, std::ostream& err);

/// Space spec or tensor file.
int cmd_verify(const std::string& space, const Options& opts, std::ostream& out, std::ostream& err);

int cmd_space(const std::string& space, const Options& opts, const std::string& write_tensor, std::ostream& out,
              std::ostream& err);

int cmd_compare(const std::string& a, const std::string& b, const Options& opts, std::ostream& out,
                std::ostream& err);

} // namespace harmonic::cli
