#pragma once

// Exhaustive functional graphs of theta_k on P^1(F_{p^n}) for small fields.

#include <cstdint>
#include <string>
#include <vector>

#include "qkforge/fq.hpp"
#include "qkforge/seqgen.hpp"

namespace qkforge {

/// Node 0 is infinity; node 1 + i is the field element with index i
/// (ascending base-p digits of its coefficient list).
struct FunctionalGraph {
  u64 p = 0;
  int n = 0;
  u64 k = 0;
  Poly modulus{3};
  std::vector<std::uint32_t> successor;

  std::size_t size() const { return successor.size(); }
};

/// Field-size cap from QKFORGE_CAP, falling back to kDefaultFieldCap.
u64 configured_cap();

FunctionalGraph build_graph(const Poly& modulus, FpElem k, u64 cap = configured_cap());

struct ComponentStats {
  std::uint64_t cycle_length = 0;
  std::uint64_t tree_depth = 0;
  std::uint64_t node_count = 0;
  bool binary_shape_ok = false;
  bool contains_infinity = false;
};

/// Components ordered by their smallest node index.
std::vector<ComponentStats> component_stats(const FunctionalGraph& graph);

/// Distance from each node to its cycle.
std::vector<std::uint64_t> node_levels(const FunctionalGraph& graph);

/// theta_k^(2r) == theta_{-k}^(2r) pointwise for r <= r_max, and matching
/// periodicity of the iterates.
bool check_lemma_kk(const Poly& modulus, FpElem k, int r_max, u64 cap = configured_cap());

std::string export_dot(const FunctionalGraph& graph, bool labels);

}  // namespace qkforge
