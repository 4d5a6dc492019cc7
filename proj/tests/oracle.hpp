#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls into the library.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Coeffs = std::vector<std::int64_t>;  // ascending, entries in [0, p)

inline std::int64_t md(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = md(r[i + j] + a[i] * b[j], p);
  trim(r);
  return r;
}

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2, b = md(a, p);
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Remainder of schoolbook long division.
inline Coeffs rem(Coeffs a, const Coeffs& b, std::int64_t p) {
  trim(a);
  const std::int64_t lead_inv = inv(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = md(a[shift + j] - c * b[j], p);
    trim(a);
  }
  return a;
}

inline std::int64_t eval(const Coeffs& a, std::int64_t x, std::int64_t p) {
  std::int64_t r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = md(r * x + *it, p);
  return r;
}

/// Trial division by every monic polynomial of degree <= deg/2.
inline bool brute_irreducible(const Coeffs& f, std::int64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  for (int d = 1; d <= n / 2; ++d) {
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::int64_t idx = 0; idx < total; ++idx) {
      Coeffs g(d + 1, 0);
      std::int64_t t = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      if (rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// #E(F_p) for y^2 = x^3 + a4 x + a6 by enumerating every (x, y).
inline std::int64_t naive_points(std::int64_t a4, std::int64_t a6, std::int64_t p) {
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t rhs = md(x * x % p * x + a4 * x + a6, p);
    for (std::int64_t y = 0; y < p; ++y)
      if (y * y % p == rhs) ++count;
  }
  return count;
}

/// theta_k on P^1(F_p); -1 stands for infinity.
inline std::int64_t theta(std::int64_t x, std::int64_t k, std::int64_t p) {
  if (x <= 0) return -1;
  return md(k * md(x + inv(x, p), p), p);
}

/// Random monic polynomial of the given degree.
inline Coeffs random_monic(int deg, std::int64_t p, std::mt19937_64& rng) {
  Coeffs f(deg + 1);
  for (int i = 0; i < deg; ++i) f[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
  f[deg] = 1;
  return f;
}

/// 2-adic valuation of a nonzero integer.
inline int nu2(std::int64_t v) {
  int e = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++e;
  }
  return e;
}

}  // namespace oracle
