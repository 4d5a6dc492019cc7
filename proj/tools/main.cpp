#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace cli = qkforge::cli;

int main(int argc, char** argv) {
  CLI::App app{"qkforge: irreducible polynomial sequences from iterated Q_k-transforms"};
  app.require_subcommand(1);

  qkforge::u64 p = 0;
  std::string k_token;
  std::string class_token;
  bool json_out = false;
  int n = 1;
  std::string f_text;
  qkforge::u64 seed = 0;

  auto* find_k = app.add_subcommand("find-k", "List admissible multipliers of a class");
  find_k->add_option("--p", p, "Odd prime")->required();
  find_k->add_option("--class", class_token, "c1, c2, c3 or c3-")->required();
  find_k->add_flag("--json", json_out, "Emit JSON");

  auto* predict = app.add_subcommand("predict", "Predict tree depths and the degree schedule");
  predict->add_option("--p", p, "Odd prime")->required();
  predict->add_option("--k", k_token, "Multiplier or class token")->required();
  predict->add_option("--n", n, "Degree of f0")->required();

  auto* transform = app.add_subcommand("transform", "Apply the Q_k-transform to one polynomial");
  transform->add_option("--p", p, "Odd prime")->required();
  transform->add_option("--k", k_token, "Multiplier or class token")->required();
  transform->add_option("--f", f_text, "Polynomial, e.g. 51,3,0,0,0,1 or x^5+3*x+51")->required();
  transform->add_option("--seed", seed, "Factorization seed");

  cli::GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate an irreducible sequence and check its schedule");
  generate->add_option("--p", gen.p, "Odd prime")->required();
  generate->add_option("--k", gen.k, "Multiplier or class token")->required();
  generate->add_option("--f0", gen.f0, "Monic irreducible start polynomial")->required();
  generate->add_option("--steps", gen.steps, "Number of steps")->required();
  generate->add_option("--seed", gen.seed, "Factorization seed");
  generate->add_option("--out", gen.out_path, "Output JSON file (default stdout)");

  cli::ExampleExpectation expect;
  std::string expect_c2;
  std::string expect_c3;
  auto* verify = app.add_subcommand("verify-example", "Reproduce the p = 53 example runs");
  verify->add_option("--seed", seed, "Factorization seed");
  verify->add_option("--expect-c2", expect_c2, "Override the expected C2 degree trace (testing)");
  verify->add_option("--expect-c3", expect_c3, "Override the expected C3 degree trace (testing)");

  cli::ExploreArgs exp;
  auto* explore = app.add_subcommand("explore", "Build the theta_k graph on a small field");
  explore->add_option("--p", exp.p, "Odd prime")->required();
  explore->add_option("--n", exp.n, "Extension degree");
  explore->add_option("--k", exp.k, "Multiplier or class token")->required();
  explore->add_option("--modulus", exp.modulus, "Irreducible modulus of degree n");
  explore->add_option("--dot", exp.dot_path, "Write the graph in DOT format");
  explore->add_option("--stats", exp.stats_path, "Write component statistics as JSON");
  explore->add_flag("--labels", exp.labels, "Label DOT nodes with polynomial representatives");

  cli::SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep-lemmas", "Check the depth lemmas over a range of primes");
  sweep_cmd->add_option("--max-p", sweep.max_p, "Exclusive prime bound");
  sweep_cmd->add_option("--max-n", sweep.max_n, "Largest degree n");
  sweep_cmd->add_option("--max-m", sweep.max_m, "Largest doubling base m");
  sweep_cmd->add_option("--max-i", sweep.max_i, "Largest doubling index i");
  sweep_cmd->add_option("--class", sweep.which, "c2, c3 or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kOk : cli::kUsage;
  }

  try {
    if (*find_k) return cli::find_k(std::cout, p, class_token, json_out);
    if (*predict) return cli::predict(std::cout, p, k_token, n);
    if (*transform) return cli::transform(std::cout, p, k_token, f_text, seed);
    if (*generate) return cli::generate(std::cout, std::cerr, gen);
    if (*verify) {
      if (!expect_c2.empty()) expect.c2_trace = cli::parse_trace(expect_c2);
      if (!expect_c3.empty()) expect.c3_trace = cli::parse_trace(expect_c3);
      return cli::verify_example(std::cout, expect, seed);
    }
    if (*explore) return cli::explore(std::cout, exp);
    if (*sweep_cmd) return cli::sweep_lemmas(std::cout, sweep);
  } catch (...) {
    return cli::report_exception(std::cerr);
  }
  return cli::kUsage;
}
