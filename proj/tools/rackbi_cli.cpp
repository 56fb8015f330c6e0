#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rackbi/error.hpp"
#include "rackbi/runner.hpp"

int main(int argc, char** argv) {
  rackbi::RunConfig cfg;

  CLI::App app{
      "rackbi: exact constructions and property checks for rack bialgebras "
      "built from Leibniz algebras"};
  app.add_option("--input", cfg.input,
                 "JSON file, catalog:NAME, or dihedral:m")
      ->required();
  app.add_option("--command", cfg.command,
                 "validate | ideals | rack-check | star | cohomology | "
                 "lp-check | report")
      ->required();
  app.add_option("--degree-cap", cfg.degree_cap,
                 "degree cap of the symmetric coalgebra (default 2)");
  app.add_option("--hbar-order", cfg.hbar_order,
                 "deformation-parameter truncation order (default 4)");
  app.add_option("--filtration-cap", cfg.filtration_cap,
                 "enveloping word-length bound (default 3)");
  app.add_option("--seed", cfg.seed,
                 "seed for randomized property sampling (default 0)");
  app.add_flag("--parallel", cfg.parallel,
               "run independent checks concurrently");
  app.add_option("--output", cfg.output,
                 "write the report here instead of stdout");
  CLI11_PARSE(app, argc, argv);

  try {
    const rackbi::RunResult result = rackbi::run(cfg);
    if (cfg.output.empty()) {
      std::cout << result.report;
    } else {
      std::ofstream out(cfg.output, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write to '" << cfg.output << "'\n";
        return 2;
      }
      out << result.report;
    }
    std::cerr << result.timing;
    return result.exit_code;
  } catch (const rackbi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
