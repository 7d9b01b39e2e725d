#include <CLI11.hpp>

#include <iostream>

#include "painleve/cli/run.hpp"

int main(int argc, char** argv) {
  using painleve::cli::InputMode;
  CLI::App app{"Invariant classification of y'' = P + 3Q y' + 3R y'^2 + S y'^3 and equivalence to PII and P34"};
  painleve::cli::RunConfig cfg;

  std::string rhs;
  std::vector<std::string> coeffs, implicit;
  double abs_tol = 0.0;
  unsigned samples = 0;
  auto* o_rhs = app.add_option("--rhs", rhs, "right-hand side in x, y, p = y' and parameters");
  auto* o_coeffs = app.add_option("--coeffs", coeffs, "coefficients P Q R S")->expected(4);
  auto* o_implicit = app.add_option("--implicit", implicit, "lead and rest of lead * y'' = rest")->expected(2);
  o_rhs->excludes(o_coeffs)->excludes(o_implicit);
  o_coeffs->excludes(o_implicit);
  app.add_option("--param", cfg.params, "parameter: name, name!=0 or name>0 (repeatable)")->take_all();
  app.add_flag("--json", cfg.json, "machine-readable report");
  app.add_flag("--verify", cfg.verify, "re-check emitted transformations with an independent seed");
  app.add_option("--seed", cfg.seed, "sampling seed");
  auto* o_tol = app.add_option("--abs-tol", abs_tol, "zero-test tolerance, relative to the sample magnitude")
                    ->check(CLI::PositiveNumber);
  auto* o_samples = app.add_option("--samples", samples, "zero-test sample count")->check(CLI::Range(1u, 10000u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return painleve::cli::kInputError;
  }

  if (*o_rhs) {
    cfg.mode = InputMode::Rhs;
    cfg.inputs = {rhs};
  } else if (*o_coeffs) {
    cfg.mode = InputMode::Coefficients;
    cfg.inputs = coeffs;
  } else if (*o_implicit) {
    cfg.mode = InputMode::Implicit;
    cfg.inputs = implicit;
  } else {
    std::cerr << "error: one of --rhs, --coeffs or --implicit is required\n";
    return painleve::cli::kInputError;
  }
  if (*o_tol) cfg.abs_tol = abs_tol;
  if (*o_samples) cfg.samples = samples;
  return painleve::cli::run(cfg, std::cout, std::cerr);
}
