#include "qkforge/dynamics_lab.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

namespace qkforge {

u64 configured_cap() {
  if (const char* env = std::getenv("QKFORGE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultFieldCap;
}

FunctionalGraph build_graph(const Poly& modulus, FpElem k, u64 cap) {
  if (k.is_zero()) throw UsageError("multiplier k must be nonzero");
  if (modulus.modulus() != k.modulus()) throw UsageError("modulus and multiplier live over different primes");
  const FieldRef field = ExtField::make(modulus);
  const u64 q = field->size();
  if (q + 1 > cap) {
    throw ResourceError("graph on " + std::to_string(q + 1) + " nodes exceeds cap " + std::to_string(cap));
  }
  FunctionalGraph g;
  g.p = field->p();
  g.n = field->degree();
  g.k = k.value();
  g.modulus = modulus;
  g.successor.assign(q + 1, 0);
  for (u64 i = 0; i < q; ++i) {
    const ProjValue image = theta_eval(ProjValue::finite(FqElem::from_index(field, i)), k);
    g.successor[i + 1] = image.is_infinity() ? 0 : static_cast<std::uint32_t>(image.value().index() + 1);
  }
  return g;
}

namespace {

struct Analysis {
  std::vector<char> periodic;
  std::vector<std::uint64_t> level;
  std::vector<std::uint32_t> cycle_rep;  // smallest node of the cycle each node drains into
};

Analysis analyse(const FunctionalGraph& g) {
  const std::size_t n = g.size();
  Analysis a;
  a.periodic.assign(n, 0);
  a.level.assign(n, 0);
  a.cycle_rep.assign(n, 0);

  // 0 = unvisited, 1 = on current walk, 2 = done
  std::vector<char> state(n, 0);
  std::vector<std::uint32_t> walk;
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s]) continue;
    walk.clear();
    std::uint32_t v = static_cast<std::uint32_t>(s);
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = g.successor[v];
    }
    if (state[v] == 1) {
      std::uint32_t rep = v;
      std::uint32_t u = v;
      do {
        a.periodic[u] = 1;
        rep = std::min(rep, u);
        u = g.successor[u];
      } while (u != v);
      do {
        a.cycle_rep[u] = rep;
        u = g.successor[u];
      } while (u != v);
    }
    for (auto w : walk) state[w] = 2;
  }

  // Preimage lists in CSR form, then BFS outward from the cycles.
  std::vector<std::uint32_t> start(n + 1, 0), pre(n);
  for (std::size_t v = 0; v < n; ++v) ++start[g.successor[v] + 1];
  for (std::size_t v = 0; v < n; ++v) start[v + 1] += start[v];
  std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
  for (std::size_t v = 0; v < n; ++v) pre[fill[g.successor[v]]++] = static_cast<std::uint32_t>(v);

  std::deque<std::uint32_t> queue;
  for (std::size_t v = 0; v < n; ++v)
    if (a.periodic[v]) queue.push_back(static_cast<std::uint32_t>(v));
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto i = start[v]; i < start[v + 1]; ++i) {
      const auto u = pre[i];
      if (a.periodic[u]) continue;
      a.level[u] = a.level[v] + 1;
      a.cycle_rep[u] = a.cycle_rep[v];
      queue.push_back(u);
    }
  }
  return a;
}

}  // namespace

std::vector<std::uint64_t> node_levels(const FunctionalGraph& graph) { return analyse(graph).level; }

std::vector<ComponentStats> component_stats(const FunctionalGraph& graph) {
  const Analysis a = analyse(graph);
  const std::size_t n = graph.size();

  // Preimages counted with multiplicity: theta_k is ramified at x = 1 and
  // x = -1 (x = 1/x), which are double preimages of 2k and -2k.
  const std::size_t plus_one = 2;  // node of the element 1
  const std::size_t minus_one = graph.p;  // node of p - 1
  std::vector<std::uint32_t> indeg(n, 0), np_preimages(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint32_t mult = (v == plus_one || v == minus_one) ? 2 : 1;
    indeg[graph.successor[v]] += mult;
    if (!a.periodic[v]) np_preimages[graph.successor[v]] += mult;
  }

  std::vector<int> slot(n, -1);
  std::vector<ComponentStats> out;
  for (std::size_t v = 0; v < n; ++v) {
    const auto rep = a.cycle_rep[v];
    if (slot[rep] < 0) {
      slot[rep] = static_cast<int>(out.size());
      out.push_back({0, 0, 0, true, false});
    }
    auto& c = out[static_cast<std::size_t>(slot[rep])];
    ++c.node_count;
    if (v == 0) c.contains_infinity = true;
    if (a.periodic[v]) {
      ++c.cycle_length;
      // A periodic node has one periodic preimage and roots at most one tree.
      if (np_preimages[v] > 1) c.binary_shape_ok = false;
    } else {
      c.tree_depth = std::max(c.tree_depth, a.level[v]);
      if (indeg[v] != 0 && indeg[v] != 2) c.binary_shape_ok = false;
    }
  }
  return out;
}

bool check_lemma_kk(const Poly& modulus, FpElem k, int r_max, u64 cap) {
  if (r_max < 0) throw UsageError("r_max must be nonnegative");
  const FunctionalGraph plus = build_graph(modulus, k, cap);
  const FunctionalGraph minus = build_graph(modulus, -k, cap);
  const std::size_t n = plus.size();

  for (std::size_t x = 0; x < n; ++x) {
    std::uint32_t a = static_cast<std::uint32_t>(x), b = a;
    for (int r = 1; r <= r_max; ++r) {
      a = plus.successor[plus.successor[a]];
      b = minus.successor[minus.successor[b]];
      if (a != b) return false;
    }
  }
  // If theta_k^t(x) is theta_k-periodic then so is theta_{-k}^t(x) under
  // theta_{-k}: the level under -k never exceeds the level under k.
  const auto lp = node_levels(plus);
  const auto lm = node_levels(minus);
  for (std::size_t x = 0; x < n; ++x) {
    if (lm[x] > lp[x]) return false;
  }
  return true;
}

std::string export_dot(const FunctionalGraph& graph, bool labels) {
  FieldRef field;
  if (labels) field = ExtField::make(graph.modulus);
  auto name = [](std::uint32_t v) { return v == 0 ? std::string("inf") : std::to_string(v - 1); };

  std::ostringstream os;
  os << "digraph theta {\n";
  os << "  // p=" << graph.p << " n=" << graph.n << " k=" << graph.k << " modulus=" << to_csv(graph.modulus) << "\n";
  for (std::uint32_t v = 0; v < graph.size(); ++v) {
    os << "  \"" << name(v) << "\"";
    if (labels) {
      const std::string label = v == 0 ? "inf" : to_human(FqElem::from_index(field, v - 1).rep());
      os << " [label=\"" << label << "\"]";
    }
    os << ";\n";
  }
  for (std::uint32_t v = 0; v < graph.size(); ++v) {
    os << "  \"" << name(v) << "\" -> \"" << name(graph.successor[v]) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qkforge
