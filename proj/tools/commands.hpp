#pragma once

// Subcommand bodies of the qkforge tool. Each writes to `out` and returns
// a process exit code; library exceptions propagate to the caller.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qkforge/ffpoly.hpp"

namespace qkforge::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kTheorem = 3,
  kResource = 4,
};

/// Maps the exception currently being handled to an exit code and prints it.
int report_exception(std::ostream& err);

/// Integer multiplier or class token (c1, c2, c3, c3-).
FpElem resolve_k(u64 p, const std::string& token);

int find_k(std::ostream& out, u64 p, const std::string& class_token, bool json);
int predict(std::ostream& out, u64 p, const std::string& k_token, int n);
int transform(std::ostream& out, u64 p, const std::string& k_token, const std::string& f_text, u64 seed);

struct GenerateArgs {
  u64 p = 0;
  std::string k;
  std::string f0;
  int steps = 0;
  u64 seed = 0;
  std::string out_path;  // empty: stdout
};
int generate(std::ostream& out, std::ostream& err, const GenerateArgs& args);

struct ExampleExpectation {
  std::vector<int> c2_trace{5, 10, 10, 10, 20, 20, 40, 40, 80, 80, 160, 160, 320};
  std::vector<int> c3_trace{5, 10, 20, 40, 80, 160, 320};
};
int verify_example(std::ostream& out, const ExampleExpectation& expect, u64 seed);

struct ExploreArgs {
  u64 p = 0;
  int n = 1;
  std::string k;
  std::string modulus;  // empty: first irreducible of degree n
  std::string dot_path;
  std::string stats_path;
  bool labels = false;
};
int explore(std::ostream& out, const ExploreArgs& args);

struct SweepArgs {
  u64 max_p = 300;
  int max_n = 6;
  int max_m = 3;
  int max_i = 3;
  std::string which = "all";  // c2, c3 or all
};
int sweep_lemmas(std::ostream& out, const SweepArgs& args);

std::vector<int> parse_trace(const std::string& text);

}  // namespace qkforge::cli
