#pragma once

// The Q_k-transform and the map theta_k(x) = k (x + 1/x) on P^1(F_q).

#include <optional>
#include <string>
#include <vector>

#include "qkforge/fq.hpp"

namespace qkforge {

/// A point of the projective line over F_q: a finite value or infinity.
class ProjValue {
 public:
  static ProjValue infinity() { return ProjValue(); }
  static ProjValue finite(FqElem x) { return ProjValue(std::move(x)); }

  bool is_infinity() const { return !value_.has_value(); }
  /// Precondition: !is_infinity().
  const FqElem& value() const { return *value_; }

  friend bool operator==(const ProjValue& a, const ProjValue& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return *a.value_ == *b.value_;
  }

 private:
  ProjValue() = default;
  explicit ProjValue(FqElem x) : value_(std::move(x)) {}
  std::optional<FqElem> value_;
};

enum class KClassTag { C1, C2, C3, C3Minus, Generic };

struct KClass {
  KClassTag tag;
  FpElem k;
};

std::string to_string(KClassTag tag);
/// Accepts "c1", "c2", "c3", "c3-" (and "c3minus", "generic").
KClassTag parse_class_tag(const std::string& token);

ProjValue theta_eval(const ProjValue& x, FpElem k);

/// f^{Q_k}(x) = (x/k)^n f(k(x + 1/x)), expanded in F_p[x].
Poly qk_transform(const Poly& f, FpElem k);

/// All admissible k of a class, ascending. Throws UnsupportedPrime when p
/// misses the class congruence.
std::vector<FpElem> find_k(u64 p, KClassTag tag);

/// First matching class in the order C1, C2, C3, C3Minus; else Generic.
KClass classify_k(FpElem k);
/// Every class predicate k satisfies, in check order.
std::vector<KClassTag> class_predicates(FpElem k);

bool supports_class(u64 p, KClassTag tag);
std::string required_congruence(KClassTag tag);

/// Minimal polynomial over F_p of theta_k(alpha), alpha a root of f.
Poly min_poly_theta(const Poly& f, FpElem k);

}  // namespace qkforge
