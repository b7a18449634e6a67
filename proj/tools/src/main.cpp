// Copyright 2026 The sepidem Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "CLI11.hpp"
#include "sepidem_cli/commands.hpp"

int main(int argc, char** argv) {
  namespace cli = sepidem::cli;
  CLI::App app{"Certify and derive the structure of separability idempotents"};
  app.require_subcommand(1);

  std::string mode_text;
  double tol = 0.0;
  std::uint64_t seed = 0;
  app.add_option("--mode", mode_text, "Scalar backend")->check(CLI::IsMember({"exact", "float", "float64"}));
  app.add_option("--tol", tol, "Relative tolerance for float mode")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for sampled checks and random constructions");

  std::string path;
  std::string what;
  auto* verify = app.add_subcommand("verify", "Certify an instance");
  verify->add_option("file", path)->required();
  auto* derive = app.add_subcommand("derive", "Emit derived data");
  derive->add_option("file", path)->required();
  derive->add_option("--what", what)->required()->check(CLI::IsMember({"integrals", "antipodes", "modular", "dual"}));
  auto* decompose = app.add_subcommand("decompose", "Split a self-adjoint instance into blocks");
  decompose->add_option("file", path)->required();

  cli::ConstructOptions cons;
  auto* construct = app.add_subcommand("construct", "Write an instance description");
  construct->add_option("--kind", cons.kind)
      ->required()
      ->check(CLI::IsMember({"E0", "twisted", "involutive_twisted", "direct_sum", "nonfull"}));
  construct->add_option("--out", cons.out_path)->required();
  construct->add_option("--n", cons.n, "Matrix size");
  construct->add_option("--r", cons.r, "Left twist as a JSON matrix");
  construct->add_option("--s", cons.s, "Right twist as a JSON matrix");
  construct->add_option("--components", cons.components, "JSON array of construction objects");
  construct->add_flag("--normalize", cons.normalize, "Rescale so that Tr(sr) = n");
  construct->add_flag("--explicit", cons.explicit_coefficients, "Write algebras and coefficients");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInputError;
  }

  cli::RunOptions opts;
  opts.seed = seed;
  if (!mode_text.empty()) opts.mode = cli::parse_scalar_mode(mode_text);
  if (tol > 0.0) opts.tolerance = tol;

  if (*verify) return cli::run_verify(path, opts, std::cout, std::cerr);
  if (*derive) return cli::run_derive(path, what, opts, std::cout, std::cerr);
  if (*decompose) return cli::run_decompose(path, opts, std::cout, std::cerr);
  cons.mode = opts.mode.value_or(cli::ScalarMode::exact);
  cons.tolerance = opts.tolerance;
  cons.seed = seed;
  return cli::run_construct(cons, std::cerr);
}
