#pragma once

// Iterated Q_k-transforms: sequence generation with factor selection and
// backtracking, degree-schedule prediction and conformance checking.

#include <optional>
#include <string>
#include <vector>

#include "qkforge/cm_arith.hpp"
#include "qkforge/qk_core.hpp"

namespace qkforge {

enum class StepKind {
  Initial,
  TransformIrreducible,
  SplitTookFirst,
  SplitTookSecond,
  Backtracked,
};

std::string to_string(StepKind kind);
StepKind parse_step_kind(const std::string& s);

struct NextPoly {
  Poly chosen;
  std::optional<Poly> alternate;
  StepKind kind;
};

/// One Q_k step from an irreducible f != x.
NextPoly next_poly(const Poly& f, FpElem k, u64 seed);

enum class DegreePattern { PairsEveryTwoSteps, OnePerStep, Unchecked };
std::string to_string(DegreePattern pattern);

struct ScheduleReport {
  u64 p = 0;
  u64 k = 0;
  int n = 0;
  KClassTag tag = KClassTag::Generic;
  int e0 = 0;
  int e1 = 0;
  int s_bound = 0;   // max(e0, e1)
  int st_bound = 0;  // e0 + e1
  DegreePattern pattern = DegreePattern::Unchecked;
  std::optional<int> observed_s;
  std::optional<int> observed_t;
};

/// Throws UsageError for C1 and Generic multipliers.
ScheduleReport predict_schedule(FpElem k, int n);

struct SequenceStep {
  int index = 0;
  Poly poly;
  StepKind kind = StepKind::Initial;
  std::optional<Poly> alternate;  // the factor not taken at a split
};

struct RewindEvent {
  int split_step;    // step whose alternate factor was taken
  int stalled_step;  // step at which the stall was detected
};

struct SequenceRecord {
  u64 p = 0;
  u64 k = 0;
  KClassTag tag = KClassTag::Generic;
  u64 seed = 0;
  std::vector<SequenceStep> steps;
  std::vector<RewindEvent> rewinds;

  std::vector<int> degrees() const;
  /// Number of steps that needed an equal-degree factorization.
  int factorization_count() const;
};

inline constexpr const char* kPrngName = "mt19937_64";

SequenceRecord generate_sequence(const Poly& f0, FpElem k, int num_steps, u64 seed);

/// Observed (s, t): s is the last index of the initial degree-n run and t
/// the length of the following degree-2n run. Either is empty if the record
/// stops before it is determined.
std::pair<std::optional<int>, std::optional<int>> observe_st(const SequenceRecord& record);

/// Empty iff the record conforms to the predicted schedule.
std::vector<std::string> verify_against_schedule(const SequenceRecord& record, const ScheduleReport& report);

struct PeriodInfo {
  bool periodic = false;
  u64 tail = 0;
  u64 cycle_len = 0;
};

inline constexpr u64 kDefaultFieldCap = 1ULL << 22;

/// Brent cycle detection on the theta_k orbit of x.
PeriodInfo is_periodic(const ProjValue& x, FpElem k, u64 cap = kDefaultFieldCap);
PeriodInfo is_periodic(const FqElem& beta, FpElem k, u64 cap = kDefaultFieldCap);

}  // namespace qkforge
