#include <iostream>

#include <CLI11.hpp>

#include "houe/cli.hpp"

int main(int argc, char** argv) {
  using namespace houe::cli;
  CLI::App app{"Higher-order unification with equivalences"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  app.add_option("--hou-depth", config.bounds.hou_depth, "unification depth")->check(CLI::PositiveNumber);
  app.add_option("--gamma", config.bounds.gamma_multiplicity, "gamma multiplicity")->check(CLI::PositiveNumber);
  app.add_option("--budget", config.bounds.node_budget, "node budget")->check(CLI::PositiveNumber);
  app.add_option("--max-solutions", config.bounds.max_solutions, "solution cap")->check(CLI::PositiveNumber);
  app.add_option("--ground-depth", config.bounds.ground_depth, "grounding depth")->check(CLI::PositiveNumber);
  app.add_flag("--trace", config.trace, "print proof traces");
  app.add_flag("--machine", config.machine, "JSON lines output");

  std::string input;
  struct Sub {
    const char* name;
    const char* help;
    Command cmd;
  };
  const Sub commands[] = {
      {"unify", "higher-order pre-unifiers of the equations", Command::Unify},
      {"prove", "tableau proof of the goal from the axioms", Command::Prove},
      {"houe", "unifiers modulo equivalence under the axioms", Command::Houe},
      {"correct", "readings of a correction sentence", Command::Correct}};
  for (const auto& [name, help, cmd] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", input, "problem file")->required();
    sub->callback([&config, cmd = cmd] { config.command = cmd; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  config.input = input;
  RunOutput o = run(config);
  std::cout << o.out;
  std::cerr << o.err;
  return o.status;
}
