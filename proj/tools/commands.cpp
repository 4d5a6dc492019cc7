#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "qkforge/cm_arith.hpp"
#include "qkforge/dynamics_lab.hpp"
#include "qkforge/record_io.hpp"
#include "qkforge/seqgen.hpp"

namespace qkforge::cli {

using nlohmann::json;

int report_exception(std::ostream& err) {
  try {
    throw;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kTheorem;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

FpElem resolve_k(u64 p, const std::string& token) {
  require_odd_prime(p);
  if (token.empty()) throw UsageError("missing multiplier k");
  const bool numeric = token.find_first_not_of("-0123456789") == std::string::npos;
  if (!numeric || token == "c3-") {
    return find_k(p, parse_class_tag(token)).front();
  }
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse multiplier '" + token + "'");
  }
  if (used != token.size()) throw UsageError("cannot parse multiplier '" + token + "'");
  const FpElem k(v, p);
  if (k.is_zero()) throw UsageError("multiplier k must be nonzero mod p");
  return k;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw ResourceError("write to '" + path + "' failed");
}

bool has_schedule(KClassTag tag) {
  return tag == KClassTag::C2 || tag == KClassTag::C3 || tag == KClassTag::C3Minus;
}

}  // namespace

std::vector<int> parse_trace(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("bad degree trace '" + text + "'");
    }
  }
  return out;
}

int find_k(std::ostream& out, u64 p, const std::string& class_token, bool as_json) {
  require_odd_prime(p);
  const KClassTag tag = parse_class_tag(class_token);
  const auto ks = qkforge::find_k(p, tag);
  if (as_json) {
    json j = {{"p", p}, {"class", to_string(tag)}, {"congruence", required_congruence(tag)}, {"k", json::array()}};
    for (auto k : ks) j["k"].push_back(k.value());
    out << j.dump() << "\n";
    return kOk;
  }
  out << "p = " << p << ", class " << to_string(tag) << ": congruence " << required_congruence(tag)
      << " satisfied\n";
  for (std::size_t i = 0; i < ks.size(); ++i) out << (i ? ", " : "") << ks[i].value();
  out << "\n";
  return kOk;
}

int predict(std::ostream& out, u64 p, const std::string& k_token, int n) {
  if (n < 1) throw UsageError("degree n must be positive");
  const FpElem k = resolve_k(p, k_token);
  const KClass cls = classify_k(k);
  if (!has_schedule(cls.tag)) {
    throw UsageError("no schedule prediction for k = " + std::to_string(k.value()) + " (class " +
                     to_string(cls.tag) + ")");
  }
  const DepthDetail detail = depth_detail(k, n);
  const ScheduleReport report = predict_schedule(k, n);
  out << depth_detail_to_json(detail, report).dump(2) << "\n";
  return kOk;
}

int transform(std::ostream& out, u64 p, const std::string& k_token, const std::string& f_text, u64 seed) {
  const FpElem k = resolve_k(p, k_token);
  const Poly f = parse_poly(f_text, p);
  if (f.degree() < 1) throw UsageError("transform needs a non-constant polynomial");
  const Poly q = qk_transform(f, k);
  json j = {{"p", p},
            {"k", k.value()},
            {"class", to_string(classify_k(k).tag)},
            {"f", to_csv(f)},
            {"transform", to_csv(q)},
            {"transform_human", to_human(q)},
            {"degree", q.degree()},
            {"palindromic", is_palindromic(q)},
            {"irreducible", is_irreducible(q)}};
  const Poly g = f.monic();
  if (g != Poly::x(p) && is_irreducible(g)) {
    const NextPoly next = next_poly(g, k, seed);
    json factors = json::array({to_csv(next.chosen)});
    if (next.alternate) factors.push_back(to_csv(*next.alternate));
    j["factors"] = std::move(factors);
  }
  out << j.dump(2) << "\n";
  return kOk;
}

int generate(std::ostream& out, std::ostream& err, const GenerateArgs& args) {
  const FpElem k = resolve_k(args.p, args.k);
  const Poly f0 = parse_poly(args.f0, args.p);
  const SequenceRecord rec = generate_sequence(f0, k, args.steps, args.seed);

  std::vector<std::string> violations;
  if (has_schedule(rec.tag)) {
    violations = verify_against_schedule(rec, predict_schedule(k, f0.degree()));
  } else {
    for (const auto& s : rec.steps) {
      if (!is_irreducible(s.poly)) violations.push_back("step " + std::to_string(s.index) + ": polynomial is reducible");
    }
  }

  const std::string text = record_to_json(rec).dump(2) + "\n";
  if (args.out_path.empty()) {
    out << text;
  } else {
    write_text(args.out_path, text);
  }
  if (!violations.empty()) {
    err << "degree trace " << join(rec.degrees()) << "\n";
    for (const auto& v : violations) err << "violation: " << v << "\n";
    return kTheorem;
  }
  return kOk;
}

int verify_example(std::ostream& out, const ExampleExpectation& expect, u64 seed) {
  const u64 p = 53;
  const Poly f0 = parse_poly("51,3,0,0,0,1", p);
  struct Run {
    const char* label;
    u64 k;
    int steps;
    const std::vector<int>& trace;
  };
  const Run runs[] = {{"C2", 15, 12, expect.c2_trace}, {"C3", 7, 6, expect.c3_trace}};

  bool ok = true;
  for (const auto& run : runs) {
    const auto t0 = std::chrono::steady_clock::now();
    const FpElem k(static_cast<i64>(run.k), p);
    const SequenceRecord rec = generate_sequence(f0, k, run.steps, seed);
    const ScheduleReport sched = predict_schedule(k, f0.degree());
    const auto violations = verify_against_schedule(rec, sched);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto [s, t] = observe_st(rec);
    const bool trace_ok = rec.degrees() == run.trace;

    out << run.label << " k=" << run.k << " trace " << join(rec.degrees()) << " (expected " << join(run.trace)
        << ") e0=" << sched.e0 << " e1=" << sched.e1 << " s=" << (s ? std::to_string(*s) : "?")
        << " t=" << (t ? std::to_string(*t) : "?") << " factorizations=" << rec.factorization_count()
        << " rewinds=" << rec.rewinds.size() << " time=" << secs << "s\n";
    for (const auto& v : violations) out << "  violation: " << v << "\n";
    if (!trace_ok) out << "  trace mismatch\n";
    ok = ok && trace_ok && violations.empty();
  }
  out << (ok ? "example reproduced\n" : "example NOT reproduced\n");
  return ok ? kOk : kTheorem;
}

int explore(std::ostream& out, const ExploreArgs& args) {
  if (args.n < 1) throw UsageError("degree n must be positive");
  const FpElem k = resolve_k(args.p, args.k);
  const Poly modulus = args.modulus.empty() ? first_irreducible(args.p, args.n) : parse_poly(args.modulus, args.p);
  if (modulus.degree() != args.n) {
    throw UsageError("modulus has degree " + std::to_string(modulus.degree()) + ", expected " + std::to_string(args.n));
  }
  const FunctionalGraph graph = build_graph(modulus, k, configured_cap());
  const auto stats = component_stats(graph);
  json j = components_to_json(graph, stats);
  const KClassTag tag = classify_k(k).tag;
  j["class"] = to_string(tag);

  bool ok = true;
  for (const auto& c : stats) ok = ok && c.binary_shape_ok;
  if (has_schedule(tag)) {
    const DepthPair d = depths(k, args.n);
    std::set<std::uint64_t> seen;
    for (const auto& c : stats) seen.insert(c.tree_depth);
    bool depth_ok = true;
    for (auto v : seen) depth_ok = depth_ok && (v == static_cast<std::uint64_t>(d.e0) || v == static_cast<std::uint64_t>(d.e1));
    j["e0"] = d.e0;
    j["e1"] = d.e1;
    j["depths_ok"] = depth_ok;
    ok = ok && depth_ok;
  }

  if (!args.dot_path.empty()) write_text(args.dot_path, export_dot(graph, args.labels));
  if (!args.stats_path.empty()) write_text(args.stats_path, j.dump(2) + "\n");

  out << "p=" << graph.p << " n=" << graph.n << " k=" << graph.k << " class=" << to_string(tag)
      << " nodes=" << graph.size() << " components=" << stats.size();
  if (j.contains("e0")) out << " e0=" << j["e0"] << " e1=" << j["e1"];
  out << (ok ? " ok" : " FAILED") << "\n";
  for (const auto& c : stats) {
    out << "  cycle=" << c.cycle_length << " depth=" << c.tree_depth << " nodes=" << c.node_count
        << (c.contains_infinity ? " inf" : "") << (c.binary_shape_ok ? "" : " bad-shape") << "\n";
  }
  return ok ? kOk : kTheorem;
}

int sweep_lemmas(std::ostream& out, const SweepArgs& args) {
  if (args.which != "c2" && args.which != "c3" && args.which != "all") {
    throw UsageError("--class must be c2, c3 or all");
  }
  if (args.max_n < 1 || args.max_m < 1 || args.max_i < 1) throw UsageError("index ranges must be positive");
  const int base_max = std::max(args.max_n, args.max_m);
  const int max_degree = base_max << (args.max_i + 1);

  std::vector<KClassTag> tags;
  if (args.which != "c3") tags.push_back(KClassTag::C2);
  if (args.which != "c2") {
    tags.push_back(KClassTag::C3);
    tags.push_back(KClassTag::C3Minus);
  }

  long checks = 0;
  long failures = 0;
  for (KClassTag tag : tags) {
    const int lo = tag == KClassTag::C2 ? 2 : 1;  // lower bound on e0
    const int hi = lo + 1;                        // e0 = lo forces e1 >= hi; e0 > lo forces e1 = lo
    const int step = tag == KClassTag::C2 ? 2 : 1;
    int primes = 0;
    for (u64 p = 3; p < args.max_p; p += 2) {
      if (!is_prime(p) || !supports_class(p, tag)) continue;
      ++primes;
      for (FpElem k : qkforge::find_k(p, tag)) {
        auto fail = [&](const std::string& what) {
          ++failures;
          out << "FAIL " << to_string(tag) << " p=" << p << " k=" << k.value() << ": " << what << "\n";
        };
        for (int n = 1; n <= args.max_n; ++n) {
          const DepthPair d = depths(k, n, max_degree);
          ++checks;
          if (d.e0 < lo) fail("n=" + std::to_string(n) + " e0=" + std::to_string(d.e0));
          if (d.e0 == lo && d.e1 < hi) fail("n=" + std::to_string(n) + " e0=lo but e1=" + std::to_string(d.e1));
          if (d.e0 > lo && d.e1 != lo) fail("n=" + std::to_string(n) + " e0=" + std::to_string(d.e0) + " e1=" + std::to_string(d.e1));
        }
        for (int m = 1; m <= base_max; ++m) {
          for (int i = 1; i <= args.max_i; ++i) {
            const int a = depths(k, m << i, max_degree).e0;
            const int b = depths(k, m << (i + 1), max_degree).e0;
            ++checks;
            if (b != a + step) {
              fail("doubling m=" + std::to_string(m) + " i=" + std::to_string(i) + ": " + std::to_string(a) + " -> " +
                   std::to_string(b));
            }
          }
        }
      }
    }
    out << to_string(tag) << ": " << primes << " primes below " << args.max_p << " swept\n";
  }
  out << checks << " checks, " << failures << " failures\n";
  return failures == 0 ? kOk : kTheorem;
}

}  // namespace qkforge::cli
