#pragma once

// Arithmetic over F_p and F_p[x] for odd primes p < 2^31.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qkforge/error.hpp"

namespace qkforge {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

namespace modp {

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 neg(u64 a, u64 p) { return a == 0 ? 0 : p - a; }
inline u64 mul(u64 a, u64 b, u64 p) { return a * b % p; }  // a, b < 2^31

u64 pow(u64 a, u64 e, u64 p);
/// Throws UsageError on a == 0.
u64 inv(u64 a, u64 p);
/// Reduces a signed integer into [0, p).
u64 reduce(i64 a, u64 p);

}  // namespace modp

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Throws UsageError unless p is an odd prime below 2^31.
void require_odd_prime(u64 p);

/// Element of the prime field F_p.
class FpElem {
 public:
  FpElem(i64 value, u64 p);

  u64 value() const { return value_; }
  u64 modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  FpElem operator+(FpElem o) const;
  FpElem operator-(FpElem o) const;
  FpElem operator*(FpElem o) const;
  FpElem operator/(FpElem o) const;
  FpElem operator-() const;
  FpElem inverse() const;
  FpElem pow(u64 e) const;

  friend bool operator==(const FpElem&, const FpElem&) = default;

 private:
  struct Raw {};
  FpElem(Raw, u64 value, u64 p) : value_(value), p_(p) {}
  void check_same(FpElem o) const;

  u64 value_;
  u64 p_;
};

/// Tonelli-Shanks square root, normalized to the root in [0, (p-1)/2].
std::optional<FpElem> sqrt_mod_p(FpElem a);

/// Dense univariate polynomial over F_p, coefficients in ascending degree.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial
/// is the empty vector and degree() == -1 for it.
class Poly {
 public:
  explicit Poly(u64 p) : p_(p) {}
  Poly(u64 p, std::vector<u64> coeffs);

  static Poly from_signed(u64 p, const std::vector<i64>& coeffs);
  static Poly constant(u64 p, u64 c);
  static Poly monomial(u64 p, int degree, u64 c = 1);
  static Poly x(u64 p) { return monomial(p, 1); }

  u64 modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  u64 lead() const { return c_.empty() ? 0 : c_.back(); }
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::span<const u64> coeffs() const { return c_; }

  Poly monic() const;
  u64 eval(u64 x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(u64 s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, u64 s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Canonical order: lexicographic on ascending coefficient lists.
  friend bool canonical_less(const Poly& a, const Poly& b);

  void check_same(const Poly& o) const;

 private:
  void trim();

  u64 p_;
  std::vector<u64> c_;
};

bool canonical_less(const Poly& a, const Poly& b);

/// Named form of operator*.
inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

/// Quotient and remainder; throws UsageError on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);
Poly derivative(const Poly& f);
/// x^deg(f) f(1/x).
Poly reciprocal(const Poly& f);
bool is_palindromic(const Poly& f);

/// base^e mod modulus by square-and-multiply.
Poly poly_mod_pow(const Poly& base, const BigInt& e, const Poly& modulus);

/// Reduction context for repeated arithmetic modulo one monic polynomial.
///
/// Keeps x^n, ..., x^(2n-2) mod f so a reduction is a single pass with
/// 128-bit accumulators.
class PolyModulus {
 public:
  explicit PolyModulus(Poly f);

  const Poly& poly() const { return f_; }
  int degree() const { return n_; }
  u64 p() const { return f_.modulus(); }

  Poly reduce(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly pow(const Poly& base, const BigInt& e) const;
  Poly pow(const Poly& base, u64 e) const;

 private:
  Poly f_;
  int n_;
  std::vector<std::vector<u64>> tail_;  // tail_[j] = x^(n+j) mod f
};

/// The p-th power map g -> g^p on F_p[x]/(f), stored as a matrix.
///
/// Since g(x)^p = g(x^p) over F_p, applying the map is a matrix-vector
/// product against the columns x^(jp) mod f.
class FrobeniusMap {
 public:
  explicit FrobeniusMap(const PolyModulus& mod);

  Poly apply(const Poly& g) const;
  /// g^(p^times).
  Poly apply(const Poly& g, int times) const;

 private:
  u64 p_;
  int n_;
  std::vector<std::vector<u64>> cols_;
};

/// Rabin's test. Non-monic input is normalized; constants throw UsageError.
bool is_irreducible(const Poly& f);

/// Cantor-Zassenhaus splitting of a squarefree f whose irreducible factors
/// all have degree d. Factors come back in canonical order.
std::vector<Poly> equal_degree_factorize(const Poly& f, int d, u64 seed);

/// First monic irreducible of the given degree in base-p counting order of
/// the non-leading coefficients.
Poly first_irreducible(u64 p, int degree);

/// Parses "51,3,0,0,0,1" or "x^5+3*x+51".
Poly parse_poly(std::string_view text, u64 p);
std::string to_csv(const Poly& f);
std::string to_human(const Poly& f);

}  // namespace qkforge
