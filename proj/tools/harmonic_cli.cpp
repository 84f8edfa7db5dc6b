#include "harmonic/cli/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
  using namespace harmonic::cli;

  CLI::App app{"Radial expansions and heat invariants of harmonic spaces"};
  app.require_subcommand(1);

  Options opts;
  int order = 0;
  std::vector<CLI::Option*> order_options;
  auto add_common = [&](CLI::App* sub, bool with_samples) {
    order_options.push_back(sub->add_option("--order", order, "Series order (default depends on the command)"));
    sub->add_option("--tol", opts.tol, "Relative tolerance")->capture_default_str();
    sub->add_option("--seed", opts.seed, "Master seed for sampling")->capture_default_str();
    sub->add_flag("--json", opts.json, "Machine-readable output");
    if (with_samples) sub->add_option("--samples", opts.samples, "Monte Carlo samples")->capture_default_str();
  };

  std::string target;
  auto* expand = app.add_subcommand("expand", "Print an exact symbolic series");
  expand->add_option("target", target, "sigma | sigma2 | sigma4 | trace | ricS | rS | ball")->required();
  add_common(expand, false);

  std::string verify_space;
  auto* verify = app.add_subcommand("verify", "Run the identity suite on a space spec or tensor file");
  verify->add_option("space", verify_space, "Space spec or tensor file")->required();
  add_common(verify, true);

  std::string space_arg, write_tensor;
  auto* space = app.add_subcommand("space", "Print the invariant report of a space");
  space->add_option("space", space_arg, "Space spec or tensor file")->required();
  space->add_option("--write-tensor", write_tensor, "Write the curvature point to this file");
  add_common(space, false);

  std::string cmp_a, cmp_b;
  auto* compare = app.add_subcommand("compare", "Compare heat invariants of two spaces");
  compare->add_option("a", cmp_a, "First space")->required();
  compare->add_option("b", cmp_b, "Second space")->required();
  add_common(compare, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  for (const CLI::Option* o : order_options)
    if (o->count() > 0) opts.order = order;

  try {
    if (*expand) return cmd_expand(target, opts, std::cout, std::cerr);
    if (*verify) return cmd_verify(verify_space, opts, std::cout, std::cerr);
    if (*space) return cmd_space(space_arg, opts, write_tensor, std::cout, std::cerr);
    return cmd_compare(cmp_a, cmp_b, opts, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
