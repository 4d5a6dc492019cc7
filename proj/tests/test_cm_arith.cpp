#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qkforge/cm_arith.hpp"
#include "support.hpp"

using namespace qkforge;

namespace {

// Minimal fixed-width quadratic integers for the oracle: (a, b) = a + b w.
struct Q {
  std::int64_t a, b;
};

Q qmul(Q x, Q y, int disc) {
  if (disc == -4) return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
  // w^2 = w - 2
  return {x.a * y.a - 2 * x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}

std::int64_t qnorm(Q z, int disc) { return disc == -4 ? z.a * z.a + z.b * z.b : z.a * z.a + z.a * z.b + 2 * z.b * z.b; }

Q qpow(Q z, int n, int disc) {
  Q r{1, 0};
  for (int i = 0; i < n; ++i) r = qmul(r, z, disc);
  return r;
}

/// nu_rho for rho in {w, 1 - w} by repeated exact division z / rho = z conj(rho) / 2.
int qval(Q z, Q rho) {
  const Q rc{rho.a + rho.b, -rho.b};  // conjugate in Z[w]
  int e = 0;
  for (;;) {
    const Q t = qmul(z, rc, -7);
    if (t.a % 2 != 0 || t.b % 2 != 0) return e;
    z = {t.a / 2, t.b / 2};
    ++e;
  }
}

Q from(const QuadInt& z) { return {static_cast<std::int64_t>(z.a()), static_cast<std::int64_t>(z.b())}; }

}  // namespace

TEST_CASE("quad_mul and norm") {
  CHECK(quad_mul(QuadInt(1, 1, -4), QuadInt(1, -1, -4)) == QuadInt::from_int(2, -4));
  const QuadInt w = QuadInt::omega(-7);
  CHECK(quad_mul(w, QuadInt::from_int(1, -7) - w) == QuadInt::from_int(2, -7));
  CHECK(w.conj() == QuadInt(1, -1, -7));
  CHECK(quad_mul(QuadInt(7, 2, -4), QuadInt(7, 2, -4)) == QuadInt(45, 28, -4));
  CHECK(norm(QuadInt(0, 0, -4)) == 0);
  CHECK(norm(QuadInt(1, 1, -4)) == 2);
  CHECK(norm(w) == 2);
  CHECK_THROWS_AS(QuadInt(1, 1, -4) * w, UsageError);
  CHECK_THROWS_AS(QuadInt(1, 1, -3), UsageError);
  CHECK(QuadInt(3, -2, -4).str() == "3-2*i");
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(21);
  for (int disc : {-4, -7}) {
    for (int t = 0; t < 500; ++t) {
      auto r = [&] { return static_cast<std::int64_t>(rng() % 2001) - 1000; };
      const Q x{r(), r()}, y{r(), r()};
      const QuadInt X(x.a, x.b, disc), Y(y.a, y.b, disc);
      CHECK(norm(X) == qnorm(x, disc));
      CHECK(norm(X * Y) == norm(X) * norm(Y));
      CHECK(from(X * Y).a == qmul(x, y, disc).a);
      CHECK(from(X * Y).b == qmul(x, y, disc).b);
      CHECK(norm(X.conj()) == norm(X));
      CHECK(X.trace() == (X + X.conj()).a());
    }
  }
}

TEST_CASE("count_points") {
  CHECK(count_points(kCurveC2, 5) == 4);
  for (u64 p = 3; p < 400; p += 2) {
    if (!is_prime(p)) continue;
    const auto c2 = count_points(kCurveC2, p);
    CHECK(static_cast<std::int64_t>(c2) == oracle::naive_points(1, 0, static_cast<std::int64_t>(p)));
    CHECK(c2 % 4 == 0);
    if (p == 7) {
      CHECK_THROWS_AS(count_points(kCurveC3, p), UsageError);  // discriminant vanishes
      continue;
    }
    const auto c3 = count_points(kCurveC3, p);
    CHECK(static_cast<std::int64_t>(c3) == oracle::naive_points(-35, 98, static_cast<std::int64_t>(p)));
    const double ap = static_cast<double>(p + 1) - static_cast<double>(c3);
    CHECK(std::abs(ap) <= 2 * std::sqrt(static_cast<double>(p)));
  }
}

TEST_CASE("frobenius_pi") {
  CHECK(frobenius_pi(5, KClassTag::C2) == QuadInt(1, 2, -4));
  const QuadInt pi53 = frobenius_pi(53, KClassTag::C2);
  CHECK(norm(pi53) == 53);
  CHECK(nu2(norm(pi53 - QuadInt::from_int(1, -4))) >= 2);
  for (u64 p = 3; p < 600; p += 2) {
    if (!is_prime(p)) continue;
    for (auto tag : {KClassTag::C2, KClassTag::C3}) {
      if (!supports_class(p, tag)) continue;
      const QuadInt pi = frobenius_pi(p, tag);
      CHECK(norm(pi) == p);
      CHECK(pi.trace() == BigInt(p + 1) - BigInt(count_points(curve_for(tag), p)));
      CHECK(pi.b() > 0);
    }
  }
  CHECK_THROWS_AS(frobenius_pi(11, KClassTag::C2), UsageError);
}

TEST_CASE("rho0_select and rho_valuation") {
  const QuadInt w = QuadInt::omega(-7), wb = w.conj();
  const QuadInt two = QuadInt::from_int(2, -7);
  CHECK(rho_valuation(two, w) == 1);
  CHECK(rho_valuation(QuadInt::from_int(4, -7), w) == 2);
  CHECK(rho_valuation(w, w) == 1);
  CHECK(rho_valuation(w, wb) == 0);
  CHECK_THROWS_AS(rho_valuation(QuadInt::from_int(0, -7), w), UsageError);

  const QuadInt pi = frobenius_pi(53, KClassTag::C3);
  const QuadInt rho = rho0_select(FpElem(7, 53), pi);
  CHECK((rho == w || rho == wb));
  // Residue test by hand: w = -u/v mod pi, sigma = 15.
  const i64 u = static_cast<i64>(pi.a()), v = static_cast<i64>(pi.b());
  const FpElem res = FpElem(-u, 53) / FpElem(v, 53);
  CHECK((rho == w) == (res == FpElem(15, 53)));
  CHECK(rho0_select(FpElem(7, 53), pi.conj()) == rho.conj());

  std::mt19937_64 rng(22);
  for (int t = 0; t < 500; ++t) {
    Q z{static_cast<std::int64_t>(rng() % 4001) - 2000, static_cast<std::int64_t>(rng() % 4001) - 2000};
    if (z.a == 0 && z.b == 0) continue;
    const QuadInt Z(z.a, z.b, -7);
    CHECK(rho_valuation(Z, w) == qval(z, {0, 1}));
    CHECK(rho_valuation(Z, w) + rho_valuation(Z, wb) == nu2(norm(Z)));
  }
}

TEST_CASE("depths against fixed-width oracle") {
  for (u64 p = 3; p < 300; p += 2) {
    if (!is_prime(p)) continue;
    for (auto tag : {KClassTag::C2, KClassTag::C3, KClassTag::C3Minus}) {
      if (!supports_class(p, tag)) continue;
      for (FpElem k : find_k(p, tag)) {
        const int disc = tag == KClassTag::C2 ? -4 : -7;
        const Q pi = from(frobenius_pi(p, tag));
        for (int n = 1; n <= 5; ++n) {
          const DepthPair d = depths(k, n);
          const Q pn = qpow(pi, n, disc);
          INFO("p=" << p << " k=" << k.value() << " n=" << n);
          if (tag == KClassTag::C2) {
            CHECK(d.e0 == oracle::nu2(qnorm({pn.a - 1, pn.b}, disc)));
            CHECK(d.e1 == oracle::nu2(qnorm({pn.a + 1, pn.b}, disc)));
          } else {
            const FpElem kk = tag == KClassTag::C3 ? k : -k;
            const FpElem sigma = kk * FpElem(2, p) + FpElem(1, p);
            const FpElem res = FpElem(-pi.a, p) / FpElem(pi.b, p);
            const Q rho = res == sigma ? Q{0, 1} : Q{1, -1};
            CHECK(d.e0 == qval({pn.a - 1, pn.b}, rho));
            CHECK(d.e1 == qval({pn.a + 1, pn.b}, rho));
          }
        }
      }
    }
  }
}

TEST_CASE("depth laws and conjugation invariance") {
  for (u64 p = 3; p < 300; p += 2) {
    if (!is_prime(p)) continue;
    for (auto tag : {KClassTag::C2, KClassTag::C3, KClassTag::C3Minus}) {
      if (!supports_class(p, tag)) continue;
      const QuadInt pi = frobenius_pi(p, tag);
      for (FpElem k : find_k(p, tag)) {
        for (int n = 1; n <= 6; ++n) {
          const DepthPair d = depths(k, n);
          const DepthPair c = depths_with_pi(k, n, pi.conj());
          CHECK(d.e0 == c.e0);
          CHECK(d.e1 == c.e1);
          if (tag == KClassTag::C2) {
            CHECK(d.e0 >= 2);
            CHECK(((d.e0 == 2 && d.e1 >= 3) != (d.e0 >= 3 && d.e1 == 2)));
          } else {
            CHECK(d.e0 >= 1);
            if (d.e0 == 1) CHECK(d.e1 >= 2);
            if (d.e0 >= 2) CHECK(d.e1 == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("depth errors") {
  CHECK_THROWS_AS(depths(FpElem(27, 53), 1), UsageError);  // C1
  CHECK_THROWS_AS(depths(FpElem(2, 53), 1), UsageError);   // Generic
  CHECK_THROWS_AS(depths(FpElem(15, 53), 65), ResourceError);
  CHECK_NOTHROW(depths(FpElem(15, 53), 100, 128));
  const DepthDetail dd = depth_detail(FpElem(7, 53), 5);
  CHECK(dd.rho0.has_value());
  CHECK(!depth_detail(FpElem(15, 53), 5).rho0.has_value());
  CHECK(dd.depths.e0 == 4);
  CHECK(dd.depths.e1 == 1);
  CHECK(depths(FpElem(15, 53), 5).e0 == 2);
  CHECK(depths(FpElem(15, 53), 5).e1 == 3);
}
