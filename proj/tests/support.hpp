#pragma once

#include <random>

#include "oracle.hpp"
#include "qkforge/ffpoly.hpp"

inline qkforge::Poly to_poly(const oracle::Coeffs& c, qkforge::u64 p) {
  std::vector<qkforge::u64> v(c.begin(), c.end());
  return qkforge::Poly(p, std::move(v));
}

inline oracle::Coeffs to_coeffs(const qkforge::Poly& f) {
  return oracle::Coeffs(f.coeffs().begin(), f.coeffs().end());
}

/// Random monic irreducible of the given degree (f != x), by rejection.
inline qkforge::Poly random_irreducible(int deg, qkforge::u64 p, std::mt19937_64& rng) {
  for (;;) {
    const auto f = to_poly(oracle::random_monic(deg, static_cast<std::int64_t>(p), rng), p);
    if (f != qkforge::Poly::x(p) && qkforge::is_irreducible(f)) return f;
  }
}
