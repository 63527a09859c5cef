#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  using bigrade::cli::JobSpec;

  CLI::App app{"bigrade: depth invariants of bigraded monomial modules"};
  app.require_subcommand(1);

  JobSpec job;
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("input", job.input, "Ideal or profile file");
    if (needs_input) in->required();
    sub->add_option("--axis", job.axis, "Axis ideal: P, Q or all")->check(CLI::IsMember({"P", "Q", "all"}));
    sub->add_option("--char", job.characteristic, "Rank characteristic (0 or a prime)");
  };

  struct Command {
    const char* name;
    const char* help;
    bool needs_input;
  };
  const Command commands[] = {
      {"analyze", "grade, cd, mgrade, maximal depth and CM verdicts", true},
      {"decompose", "irreducible and primary decomposition, associated primes", true},
      {"filtration", "dimension filtration with respect to the axis", true},
      {"seqcm", "sequential Cohen-Macaulayness with respect to the axis", true},
      {"lc", "local cohomology H^i with respect to the axis", true},
      {"gencm", "generalized Cohen-Macaulayness with respect to the axis", true},
      {"growth", "cumulative H^i dimensions over growing degree boxes", true},
      {"hypersurface", "classify S/fS from the factor bidegrees of f", false},
      {"crosscheck", "hypersurface classification versus the invariant engine on a monomial", false},
      {"suite", "property, oracle and hypersurface suites", false},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, c.needs_input);
    sub->callback([&job, name = std::string(c.name)] { job.command = name; });
    const std::string name = c.name;
    if (name == "lc" || name == "growth") sub->add_option("--i", job.index, "Cohomological index");
    if (name == "growth") sub->add_option("--radii", job.radii, "Box radii");
    if (name == "hypersurface") sub->add_option("--factors", job.factors, "Profile such as \"(1,1) (0,2) x1\"");
    if (name == "hypersurface" || name == "crosscheck")
      sub->add_option("--ring", job.ring, "Ring sizes m n")->expected(2);
    if (name == "crosscheck") sub->add_option("--monomial", job.monomial, "Monomial f, e.g. x1*y2^2");
    if (name == "suite") {
      sub->add_option("--suite", job.suite, "properties, oracle, hypersurface or all");
      sub->add_option("--seed", job.seed, "Random seed");
      sub->add_option("--count", job.count, "Random instances per suite");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bigrade::cli::kExitParse;
  }

  const auto result = bigrade::cli::run(job);
  std::cout << result.output;
  return result.exit_code;
}
