#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "qkforge/record_io.hpp"

using namespace qkforge;
namespace cli = qkforge::cli;

namespace {

/// Runs a command body the way main() does, returning the exit code.
template <class F>
int run(F&& body, std::string* err_text = nullptr) {
  std::ostringstream err;
  int rc = 0;
  try {
    rc = body();
  } catch (...) {
    rc = cli::report_exception(err);
  }
  if (err_text) *err_text = err.str();
  return rc;
}

}  // namespace

TEST_CASE("resolve_k") {
  CHECK(cli::resolve_k(53, "15").value() == 15);
  CHECK(cli::resolve_k(53, "-38").value() == 15);
  CHECK(cli::resolve_k(53, "c2").value() == 15);
  CHECK(cli::resolve_k(53, "c3").value() == 7);
  CHECK(cli::resolve_k(53, "c3-").value() == 34);
  CHECK(cli::resolve_k(53, "c1").value() == 26);
  CHECK_THROWS_AS(cli::resolve_k(53, "53"), UsageError);
  CHECK_THROWS_AS(cli::resolve_k(53, "1x"), UsageError);
  CHECK_THROWS_AS(cli::resolve_k(11, "c2"), UnsupportedPrime);
  CHECK_THROWS_AS(cli::resolve_k(15, "2"), UsageError);
}

TEST_CASE("find-k") {
  std::ostringstream out;
  CHECK(cli::find_k(out, 53, "c2", false) == cli::kOk);
  CHECK(out.str().find("15, 38") != std::string::npos);
  out.str("");
  CHECK(cli::find_k(out, 53, "c3", true) == cli::kOk);
  CHECK(nlohmann::json::parse(out.str())["k"] == nlohmann::json::array({7, 19}));
  std::string err;
  CHECK(run([&] { return cli::find_k(out, 11, "c2", false); }, &err) == cli::kUsage);
  CHECK(err.find("p = 1 (mod 4)") != std::string::npos);
}

TEST_CASE("predict") {
  std::ostringstream out;
  CHECK(cli::predict(out, 53, "15", 5) == cli::kOk);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["pattern"] == "pairs-every-two-steps");
  CHECK(j["s_bound"] == std::max(j["e0"].get<int>(), j["e1"].get<int>()));
  for (const char* key : {"a_p", "pi", "e0", "e1", "s_bound", "st_bound", "pattern"}) CHECK(j.contains(key));
  CHECK(!j.contains("rho0"));
  out.str("");
  CHECK(cli::predict(out, 53, "7", 5) == cli::kOk);
  j = nlohmann::json::parse(out.str());
  CHECK(j["pattern"] == "one-per-step");
  CHECK(j.contains("rho0"));
  CHECK(run([&] { return cli::predict(out, 53, "27", 5); }) == cli::kUsage);
  CHECK(run([&] { return cli::predict(out, 53, "2", 5); }) == cli::kUsage);
  CHECK(run([&] { return cli::predict(out, 53, "15", 500); }) == cli::kResource);
}

TEST_CASE("transform") {
  std::ostringstream out;
  CHECK(cli::transform(out, 5, "1", "0,0,1", 0) == cli::kOk);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["transform"] == "1,0,2,0,1");
  CHECK(j["palindromic"] == true);
  CHECK(j["irreducible"] == false);
  CHECK(!j.contains("factors"));  // x^2 is reducible
}

TEST_CASE("generate") {
  std::ostringstream out, err;
  cli::GenerateArgs args{53, "15", "x^5+3*x+51", 12, 0, ""};
  CHECK(cli::generate(out, err, args) == cli::kOk);
  const SequenceRecord rec = record_from_json(nlohmann::json::parse(out.str()));
  CHECK(rec.degrees() == std::vector<int>{5, 10, 10, 10, 20, 20, 40, 40, 80, 80, 160, 160, 320});
  const auto j = nlohmann::json::parse(out.str());
  for (const char* key : {"p", "k", "class", "seed", "steps"}) CHECK(j.contains(key));
  for (const char* key : {"i", "coeffs", "degree", "kind"}) CHECK(j["steps"][0].contains(key));

  out.str("");
  args.steps = 0;
  CHECK(cli::generate(out, err, args) == cli::kOk);
  CHECK(nlohmann::json::parse(out.str())["steps"].size() == 1);

  args.f0 = "1,0,0,0,0,1";  // x^5 + 1 = (x + 1)(...)
  CHECK(run([&] { return cli::generate(out, err, args); }) == cli::kUsage);
  args.f0 = "1,a";
  CHECK(run([&] { return cli::generate(out, err, args); }) == cli::kUsage);

  const std::string path = "test_cli_generate.json";
  args = {53, "c3", "51,3,0,0,0,1", 6, 3, path};
  CHECK(cli::generate(out, err, args) == cli::kOk);
  std::ifstream f(path);
  std::stringstream body;
  body << f.rdbuf();
  CHECK(nlohmann::json::parse(body.str())["class"] == "C3");
  std::remove(path.c_str());
}

TEST_CASE("verify-example") {
  std::ostringstream out;
  CHECK(cli::verify_example(out, {}, 0) == cli::kOk);
  cli::ExampleExpectation tampered;
  tampered.c2_trace.back() = 640;
  CHECK(cli::verify_example(out, tampered, 0) == cli::kTheorem);
  tampered = {};
  tampered.c3_trace = cli::parse_trace("5,10,20");
  CHECK(cli::verify_example(out, tampered, 0) == cli::kTheorem);
}

TEST_CASE("explore") {
  std::ostringstream out;
  cli::ExploreArgs args;
  args.p = 53;
  args.k = "c3";
  CHECK(cli::explore(out, args) == cli::kOk);
  CHECK(out.str().find(" ok") != std::string::npos);
  args.p = 5;
  args.n = 3;
  args.k = "1";
  args.modulus = "1,1,0,1";  // x^3 + x + 1 over F_5
  CHECK(cli::explore(out, args) == cli::kOk);
  args.modulus = "1,0,1";
  CHECK(run([&] { return cli::explore(out, args); }) == cli::kUsage);
}

TEST_CASE("sweep-lemmas") {
  std::ostringstream out;
  cli::SweepArgs args;
  args.max_p = 100;
  CHECK(cli::sweep_lemmas(out, args) == cli::kOk);
  CHECK(out.str().find(" 0 failures") != std::string::npos);
  args.which = "c5";
  CHECK(run([&] { return cli::sweep_lemmas(out, args); }) == cli::kUsage);
}
