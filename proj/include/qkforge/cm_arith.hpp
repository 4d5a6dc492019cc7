#pragma once

// Arithmetic in Z[i] and Z[(1+sqrt(-7))/2], Frobenius elements of the two
// CM curves, and the 2-adic valuations that fix tree depths.

#include <string>

#include "qkforge/ffpoly.hpp"
#include "qkforge/qk_core.hpp"

namespace qkforge {

/// a + b*w with w = i (disc -4, w^2 = -1) or w = (1+sqrt(-7))/2
/// (disc -7, w^2 = w - 2).
class QuadInt {
 public:
  QuadInt(BigInt a, BigInt b, int disc);

  static QuadInt from_int(BigInt a, int disc) { return {std::move(a), 0, disc}; }
  /// The generator w itself.
  static QuadInt omega(int disc) { return {0, 1, disc}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  int disc() const { return disc_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadInt conj() const;
  BigInt trace() const;

  QuadInt operator+(const QuadInt& o) const;
  QuadInt operator-(const QuadInt& o) const;
  QuadInt operator*(const QuadInt& o) const;
  QuadInt pow(u64 e) const;

  friend bool operator==(const QuadInt&, const QuadInt&) = default;

  std::string str() const;

 private:
  void check_same(const QuadInt& o) const;

  BigInt a_;
  BigInt b_;
  int disc_;
};

inline QuadInt quad_mul(const QuadInt& x, const QuadInt& y) { return x * y; }
BigInt norm(const QuadInt& z);

/// 2-adic valuation; throws UsageError on zero.
int nu2(const BigInt& m);

/// y^2 = x^3 + a4 x + a6.
struct CurveSpec {
  i64 a4;
  i64 a6;
  KClassTag for_class;
};

/// y^2 = x^3 + x, for class C2.
inline constexpr CurveSpec kCurveC2{1, 0, KClassTag::C2};
/// y^2 = x^3 - 35x + 98, for classes C3 and C3-.
inline constexpr CurveSpec kCurveC3{-35, 98, KClassTag::C3};

const CurveSpec& curve_for(KClassTag tag);

/// #E(F_p) by the quadratic character sum, O(p).
u64 count_points(const CurveSpec& curve, u64 p);

/// Frobenius element with norm p and trace p + 1 - #E(F_p), normalized to a
/// positive second coordinate.
QuadInt frobenius_pi(u64 p, KClassTag tag);

/// The norm-2 prime rho_0 in Z[(1+sqrt(-7))/2]: w or its conjugate 1 - w,
/// whichever is congruent to 2k+1 modulo pi. k must be a C3 root.
QuadInt rho0_select(FpElem k, const QuadInt& pi);

/// Largest e with rho^e | z; rho must have norm 2 and z must be nonzero.
int rho_valuation(QuadInt z, const QuadInt& rho);

struct DepthPair {
  int e0 = 0;
  int e1 = 0;
  u64 p = 0;
  int n = 0;
  KClassTag tag = KClassTag::Generic;
};

/// Everything needed to report a depth computation.
struct DepthDetail {
  DepthPair depths;
  BigInt a_p;
  QuadInt pi;
  std::optional<QuadInt> rho0;
};

inline constexpr int kDefaultMaxDegree = 64;

DepthDetail depth_detail(FpElem k, int n, int max_degree = kDefaultMaxDegree);
DepthPair depths(FpElem k, int n, int max_degree = kDefaultMaxDegree);

/// Depths computed from a caller-supplied Frobenius element (either
/// conjugate); used to check conjugation invariance.
DepthPair depths_with_pi(FpElem k, int n, const QuadInt& pi);

}  // namespace qkforge
