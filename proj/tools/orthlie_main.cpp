#include "orthlie/cli.hpp"
#include "orthlie/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"spectral toolkit for the skew classes of matrix conjugations"};
  app.require_subcommand(1);

  orthlie::cli::GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "emit a generated instance as JSON");
  gen->add_option("--n", gen_opt.n, "matrix dimension")->check(CLI::PositiveNumber);
  gen->add_option("--kind", gen_opt.kind, "dense | block-sums | nilpotent | repeated");
  gen->add_option("--seed", gen_opt.seed, "deterministic seed");
  gen->add_option("--coeffs", gen_opt.coeffs,
                  "plane-block coefficients, e.g. --coeffs i 2i 1+0.5i")
      ->expected(-1);
  gen->add_option("--indent", gen_opt.indent, "JSON indent, -1 for compact");

  orthlie::cli::AnalyzeOptions an_opt;
  CLI::App* an = app.add_subcommand(
      "analyze", "read an instance, compare predicted and brute-force spectra");
  an->add_option("input", an_opt.input, "input file ('-' or omitted: stdin)");

  orthlie::cli::VerifyOptions ver_opt;
  CLI::App* ver = app.add_subcommand("verify", "run a property suite");
  ver->add_option("--suite", ver_opt.suite, "all | derivation | duality | riesz | ideals | geometry")
      ->check(CLI::IsMember(orthlie::verify::suite_names()));
  ver->add_flag("--json", ver_opt.json, "machine-readable report");

  for (CLI::App* sub : {an, ver}) {
    orthlie::ToleranceProfile* tol =
        sub == an ? &an_opt.tol : &ver_opt.tol;
    sub->add_option("--atol", tol->atol, "absolute tolerance floor");
    sub->add_option("--rtol", tol->rtol, "relative tolerance");
    sub->add_option("--contour-points", tol->contour_points, "resolvent quadrature nodes");
    sub->add_option_function<double>(
        "--cluster", [tol](const double& v) { tol->cluster_override = v; },
        "fixed eigenvalue grouping radius");
  }

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) return orthlie::cli::run_gen(gen_opt, std::cout, std::cerr);
  if (an->parsed())
    return orthlie::cli::run_analyze(an_opt, std::cin, std::cout, std::cerr);
  return orthlie::cli::run_verify(ver_opt, std::cout, std::cerr);
}
