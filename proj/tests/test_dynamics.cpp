#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qkforge/dynamics_lab.hpp"
#include "support.hpp"

using namespace qkforge;

TEST_CASE("build_graph on F_5 with k = 1") {
  const FunctionalGraph g = build_graph(Poly::x(5), FpElem(1, 5), 100);
  REQUIRE(g.size() == 6);
  // inf, 0, 1, 2, 3, 4 -> inf, inf, 2, 0, 0, 3
  CHECK(g.successor == std::vector<std::uint32_t>{0, 0, 3, 1, 1, 4});
  for (std::int64_t x = 0; x < 5; ++x) {
    const std::int64_t img = oracle::theta(x, 1, 5);
    CHECK(g.successor[static_cast<std::size_t>(x + 1)] == static_cast<std::uint32_t>(img + 1));
  }
}

TEST_CASE("graph invariants") {
  for (u64 p : {5ULL, 13ULL, 29ULL}) {
    for (int n = 1; n <= 2; ++n) {
      const Poly m = first_irreducible(p, n);
      const FunctionalGraph g = build_graph(m, find_k(p, KClassTag::C2).front());
      u64 q = 1;
      for (int i = 0; i < n; ++i) q *= p;
      CHECK(g.size() == q + 1);
      CHECK(g.successor[0] == 0);
      CHECK(g.successor[1] == 0);
      const auto stats = component_stats(g);
      std::uint64_t total = 0;
      int with_inf = 0;
      for (const auto& c : stats) {
        total += c.node_count;
        CHECK(c.cycle_length >= 1);
        CHECK(c.node_count >= c.cycle_length);
        with_inf += c.contains_infinity;
      }
      CHECK(total == g.size());
      CHECK(with_inf == 1);
      CHECK(node_levels(g)[1] >= 1);  // 0 hangs off the fixed point inf
    }
  }
  CHECK_THROWS_AS(build_graph(first_irreducible(5, 3), FpElem(1, 5), 100), ResourceError);
  CHECK_THROWS_AS(build_graph(Poly::x(5), FpElem(0, 5), 100), UsageError);
  CHECK_THROWS_AS(build_graph(Poly(5, {1, 0, 1}), FpElem(1, 5), 100), UsageError);
}

TEST_CASE("tree depths lie in {e0, e1} and trees are binary") {
  for (u64 p : {5ULL, 13ULL, 29ULL, 37ULL, 53ULL}) {
    for (int n = 1; n <= 2; ++n) {
      for (auto tag : {KClassTag::C2, KClassTag::C3, KClassTag::C3Minus}) {
        if (!supports_class(p, tag)) continue;
        for (FpElem k : find_k(p, tag)) {
          const DepthPair d = depths(k, n);
          const auto stats = component_stats(build_graph(first_irreducible(p, n), k));
          INFO("p=" << p << " n=" << n << " k=" << k.value());
          for (const auto& c : stats) {
            CHECK((c.tree_depth == static_cast<std::uint64_t>(d.e0) || c.tree_depth == static_cast<std::uint64_t>(d.e1)));
            CHECK(c.binary_shape_ok);
          }
        }
      }
    }
  }
}

TEST_CASE("levels match is_periodic tails") {
  std::mt19937_64 rng(41);
  for (u64 p : {13ULL, 53ULL}) {
    const Poly m = first_irreducible(p, 2);
    const FieldRef F = ExtField::make(m);
    const FpElem k = find_k(p, KClassTag::C2).back();
    const FunctionalGraph g = build_graph(m, k);
    const auto level = node_levels(g);
    for (int t = 0; t < 200; ++t) {
      const u64 idx = rng() % F->size();
      CHECK(is_periodic(FqElem::from_index(F, idx), k).tail == level[idx + 1]);
    }
  }
}

TEST_CASE("check_lemma_kk") {
  CHECK(check_lemma_kk(Poly::x(53), FpElem(7, 53), 0));
  CHECK(check_lemma_kk(Poly::x(53), FpElem(7, 53), 10));
  CHECK(check_lemma_kk(first_irreducible(13, 2), FpElem(5, 13), 10));
  CHECK_THROWS_AS(check_lemma_kk(first_irreducible(53, 3), FpElem(7, 53), 2, 1000), ResourceError);

  // Single steps differ: theta_{-k} = -theta_k on finite nonzero values.
  const FunctionalGraph a = build_graph(Poly::x(53), FpElem(7, 53));
  const FunctionalGraph b = build_graph(Poly::x(53), FpElem(46, 53));
  CHECK(a.successor != b.successor);
}

TEST_CASE("export_dot") {
  const FunctionalGraph g = build_graph(Poly::x(5), FpElem(1, 5), 100);
  const std::string dot = export_dot(g, false);
  CHECK(dot.rfind("digraph theta {", 0) == 0);
  CHECK(dot.find("\"inf\" -> \"inf\";") != std::string::npos);
  std::size_t edges = 0, nodes = 0, pos = 0;
  while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
    ++edges;
    ++pos;
  }
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line))
    if (line.find(" -> ") == std::string::npos && line.find("\";") != std::string::npos) ++nodes;
  CHECK(edges == 6);
  CHECK(nodes == 6);
  CHECK(export_dot(g, false) == dot);
  CHECK(export_dot(g, true).find("[label=\"") != std::string::npos);
}
