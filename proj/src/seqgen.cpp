#include "qkforge/seqgen.hpp"

#include <algorithm>
#include <sstream>

namespace qkforge {

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Initial: return "initial";
    case StepKind::TransformIrreducible: return "transform-irreducible";
    case StepKind::SplitTookFirst: return "split-took-first";
    case StepKind::SplitTookSecond: return "split-took-second";
    case StepKind::Backtracked: return "backtracked";
  }
  return "?";
}

StepKind parse_step_kind(const std::string& s) {
  for (auto k : {StepKind::Initial, StepKind::TransformIrreducible, StepKind::SplitTookFirst,
                 StepKind::SplitTookSecond, StepKind::Backtracked}) {
    if (to_string(k) == s) return k;
  }
  throw MalformedInput("unknown step kind '" + s + "'");
}

std::string to_string(DegreePattern pattern) {
  switch (pattern) {
    case DegreePattern::PairsEveryTwoSteps: return "pairs-every-two-steps";
    case DegreePattern::OnePerStep: return "one-per-step";
    case DegreePattern::Unchecked: return "unchecked";
  }
  return "?";
}

namespace {

u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_sequence_start(const Poly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw UsageError("starting polynomial must be monic of positive degree");
  if (f == Poly::x(f.modulus())) throw UsageError("starting polynomial must differ from x");
  if (!is_irreducible(f)) throw UsageError("starting polynomial " + to_human(f) + " is reducible");
}

}  // namespace

NextPoly next_poly(const Poly& f, FpElem k, u64 seed) {
  if (f == Poly::x(f.modulus())) throw UsageError("next_poly is undefined for f = x");
  const int d = f.degree();
  const Poly q = qk_transform(f, k);
  if (is_irreducible(q)) return {q, std::nullopt, StepKind::TransformIrreducible};

  // f = x -+ 2k gives (x -+ 1)^2, the only non-squarefree transform.
  const Poly sq = gcd(q, derivative(q));
  if (sq.degree() > 0) {
    if (sq.degree() == d && sq * sq == q) return {sq, sq, StepKind::SplitTookFirst};
    throw TheoremViolation("transform of " + to_human(f) + " is not squarefree");
  }

  std::vector<Poly> factors;
  try {
    factors = equal_degree_factorize(q, d, seed);
  } catch (const MalformedInput& e) {
    throw TheoremViolation("transform of " + to_human(f) + " does not split into two degree-" +
                           std::to_string(d) + " factors: " + e.what());
  }
  if (factors.size() != 2) {
    throw TheoremViolation("transform of " + to_human(f) + " split into " + std::to_string(factors.size()) +
                           " factors");
  }
  return {factors[0], factors[1], StepKind::SplitTookFirst};
}

ScheduleReport predict_schedule(FpElem k, int n) {
  const DepthPair d = depths(k, n);
  ScheduleReport r;
  r.p = k.modulus();
  r.k = k.value();
  r.n = n;
  r.tag = d.tag;
  r.e0 = d.e0;
  r.e1 = d.e1;
  r.s_bound = std::max(d.e0, d.e1);
  r.st_bound = d.e0 + d.e1;
  r.pattern = d.tag == KClassTag::C2 ? DegreePattern::PairsEveryTwoSteps : DegreePattern::OnePerStep;
  return r;
}

std::vector<int> SequenceRecord::degrees() const {
  std::vector<int> out;
  for (const auto& s : steps) out.push_back(s.poly.degree());
  return out;
}

int SequenceRecord::factorization_count() const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const SequenceStep& s) {
    return s.kind == StepKind::SplitTookFirst || s.kind == StepKind::SplitTookSecond ||
           s.kind == StepKind::Backtracked;
  }));
}

namespace {

/// How many consecutive polynomials of the current degree the theorem
/// allows, given the degrees so far. Empty means unbounded.
std::optional<int> run_allowance(const std::vector<int>& degs, const ScheduleReport& sched) {
  const int n = degs.front();
  const int cur = degs.back();
  if (cur == n) return sched.s_bound + 1;
  const int s = static_cast<int>(std::find_if(degs.begin(), degs.end(), [n](int d) { return d != n; }) - degs.begin()) - 1;
  if (cur == 2 * n) return sched.st_bound - s;
  return sched.pattern == DegreePattern::PairsEveryTwoSteps ? 2 : 1;
}

int trailing_run(const std::vector<int>& degs) {
  int run = 0;
  for (auto it = degs.rbegin(); it != degs.rend() && *it == degs.back(); ++it) ++run;
  return run;
}

std::string trace_of(const SequenceRecord& rec) {
  std::ostringstream os;
  for (const auto& s : rec.steps) os << (s.index ? "," : "") << s.poly.degree() << ':' << to_string(s.kind);
  return os.str();
}

}  // namespace

SequenceRecord generate_sequence(const Poly& f0, FpElem k, int num_steps, u64 seed) {
  if (num_steps < 0) throw UsageError("number of steps must be nonnegative");
  if (f0.modulus() != k.modulus()) throw UsageError("polynomial and multiplier live over different primes");
  require_sequence_start(f0);
  const KClass cls = classify_k(k);
  if (cls.tag == KClassTag::Generic) {
    throw UsageError("k = " + std::to_string(k.value()) + " is not in C1, C2, C3 or C3-");
  }

  SequenceRecord rec;
  rec.p = k.modulus();
  rec.k = k.value();
  rec.tag = cls.tag;
  rec.seed = seed;
  rec.steps.push_back({0, f0, StepKind::Initial, std::nullopt});

  std::optional<ScheduleReport> sched;
  if (cls.tag != KClassTag::C1) sched = predict_schedule(k, f0.degree());

  while (static_cast<int>(rec.steps.size()) <= num_steps) {
    const int i = static_cast<int>(rec.steps.size());
    NextPoly next = next_poly(rec.steps.back().poly, k, splitmix64(seed ^ (static_cast<u64>(i) * 0x9e3779b97f4a7c15ULL)));
    const int prev_deg = rec.steps.back().poly.degree();
    if (next.chosen.degree() != prev_deg && next.chosen.degree() != 2 * prev_deg) {
      throw TheoremViolation("step " + std::to_string(i) + " changed degree from " + std::to_string(prev_deg) +
                             " to " + std::to_string(next.chosen.degree()));
    }
    rec.steps.push_back({i, std::move(next.chosen), next.kind, std::move(next.alternate)});
    if (!sched) continue;

    const auto degs = rec.degrees();
    const auto allowed = run_allowance(degs, *sched);
    if (!allowed || trailing_run(degs) <= *allowed) continue;

    // Stall: take the other factor at the earliest split not yet revisited.
    auto target = std::find_if(rec.steps.begin(), rec.steps.end(),
                               [](const SequenceStep& s) { return s.kind == StepKind::SplitTookFirst; });
    if (target == rec.steps.end()) {
      throw TheoremViolation("degree stalled at step " + std::to_string(i) + " with no split left to revisit; trace " +
                             trace_of(rec));
    }
    const int j = target->index;
    rec.rewinds.push_back({j, i});
    Poly first = target->poly;
    Poly second = target->alternate.value();
    rec.steps.erase(rec.steps.begin() + j, rec.steps.end());
    rec.steps.push_back({j, std::move(second), StepKind::Backtracked, std::move(first)});
  }
  return rec;
}

std::pair<std::optional<int>, std::optional<int>> observe_st(const SequenceRecord& record) {
  const auto degs = record.degrees();
  if (degs.empty()) return {std::nullopt, std::nullopt};
  const int n = degs.front();
  std::size_t i = 0;
  while (i < degs.size() && degs[i] == n) ++i;
  if (i == degs.size()) return {std::nullopt, std::nullopt};
  const int s = static_cast<int>(i) - 1;
  std::size_t j = i;
  while (j < degs.size() && degs[j] == 2 * n) ++j;
  if (j == degs.size()) return {s, std::nullopt};
  return {s, static_cast<int>(j - i)};
}

std::vector<std::string> verify_against_schedule(const SequenceRecord& record, const ScheduleReport& report) {
  std::vector<std::string> v;
  auto at = [](int i) { return "step " + std::to_string(i) + ": "; };
  if (record.steps.empty()) return {"record has no steps"};
  const int n = record.steps.front().poly.degree();
  if (record.p != report.p || record.k != report.k || n != report.n) {
    v.push_back("record (p, k, n) does not match the schedule report");
    return v;
  }

  for (const auto& s : record.steps) {
    if (s.poly.modulus() != record.p || s.poly.degree() < 1 || !s.poly.is_monic()) {
      v.push_back(at(s.index) + "polynomial is not monic over F_" + std::to_string(record.p));
    } else if (!is_irreducible(s.poly)) {
      v.push_back(at(s.index) + "polynomial is reducible");
    }
  }

  const auto degs = record.degrees();
  const int len = static_cast<int>(degs.size());
  int i = 0;
  while (i < len && degs[i] == n) ++i;
  const int s = i - 1;
  if (s > report.s_bound) {
    v.push_back(at(report.s_bound + 1) + "degree still " + std::to_string(n) + " beyond s <= " +
                std::to_string(report.s_bound));
  }
  if (i == len) return v;
  if (degs[i] != 2 * n) {
    v.push_back(at(i) + "expected degree " + std::to_string(2 * n) + ", found " + std::to_string(degs[i]));
    return v;
  }
  int j = i;
  while (j < len && degs[j] == 2 * n) ++j;
  const int st = j - 1;  // s + t
  if (st > report.st_bound) {
    v.push_back(at(report.st_bound + 1) + "degree still " + std::to_string(2 * n) + " beyond s+t <= " +
                std::to_string(report.st_bound));
  }
  if (report.pattern == DegreePattern::Unchecked) return v;

  for (int idx = st + 1; idx < len; ++idx) {
    const int off = idx - st;  // >= 1
    const int level = report.pattern == DegreePattern::PairsEveryTwoSteps ? (off + 1) / 2 : off;
    const long expected = static_cast<long>(n) << (level + 1);
    if (degs[idx] != expected) {
      v.push_back(at(idx) + "expected degree " + std::to_string(expected) + ", found " + std::to_string(degs[idx]));
    }
  }
  return v;
}

PeriodInfo is_periodic(const ProjValue& x, FpElem k, u64 cap) {
  if (!x.is_infinity()) {
    const u64 q = x.value().field()->size();
    if (q > cap) throw ResourceError("field size " + std::to_string(q) + " exceeds cap " + std::to_string(cap));
  }
  auto step = [&](const ProjValue& v) { return theta_eval(v, k); };

  // Brent: find the cycle length, then the tail.
  u64 power = 1, lam = 1;
  ProjValue tortoise = x;
  ProjValue hare = step(x);
  while (!(tortoise == hare)) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = step(hare);
    ++lam;
  }
  tortoise = x;
  hare = x;
  for (u64 i = 0; i < lam; ++i) hare = step(hare);
  u64 mu = 0;
  while (!(tortoise == hare)) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }
  return {mu == 0, mu, lam};
}

PeriodInfo is_periodic(const FqElem& beta, FpElem k, u64 cap) { return is_periodic(ProjValue::finite(beta), k, cap); }

}  // namespace qkforge
