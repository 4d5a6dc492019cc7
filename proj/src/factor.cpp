#include <algorithm>
#include <random>

#include "qkforge/ffpoly.hpp"

namespace qkforge {

namespace {

using u128 = unsigned __int128;

std::vector<u64> padded(const Poly& a, int n) {
  std::vector<u64> v(static_cast<std::size_t>(n), 0);
  for (int i = 0; i <= a.degree() && i < n; ++i) v[i] = a.coeff(i);
  return v;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- PolyModulus

PolyModulus::PolyModulus(Poly f) : f_(std::move(f)), n_(f_.degree()) {
  if (n_ < 1 || !f_.is_monic()) throw UsageError("PolyModulus needs a monic modulus of degree >= 1");
  const u64 p = f_.modulus();
  if (n_ < 2) return;
  tail_.assign(static_cast<std::size_t>(n_ - 1), std::vector<u64>(static_cast<std::size_t>(n_), 0));
  for (int i = 0; i < n_; ++i) tail_[0][i] = modp::neg(f_.coeff(i), p);
  for (int j = 1; j < n_ - 1; ++j) {
    const auto& prev = tail_[j - 1];
    auto& cur = tail_[j];
    const u64 top = prev[n_ - 1];
    cur[0] = modp::mul(top, tail_[0][0], p);
    for (int i = 1; i < n_; ++i) cur[i] = modp::add(prev[i - 1], modp::mul(top, tail_[0][i], p), p);
  }
}

Poly PolyModulus::reduce(const Poly& a) const {
  a.check_same(f_);
  if (a.degree() < n_) return a;
  if (n_ == 1 || a.degree() > 2 * n_ - 2) return a % f_;
  const u64 p = f_.modulus();
  std::vector<u128> acc(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) acc[i] = a.coeff(i);
  for (int j = 0; j <= a.degree() - n_; ++j) {
    const u64 c = a.coeff(static_cast<std::size_t>(n_ + j));
    if (c == 0) continue;
    const auto& row = tail_[j];
    for (int i = 0; i < n_; ++i) acc[i] += static_cast<u128>(c * row[i]);
  }
  std::vector<u64> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[i] = static_cast<u64>(acc[i] % p);
  return Poly(p, std::move(out));
}

Poly PolyModulus::mul(const Poly& a, const Poly& b) const { return reduce(reduce(a) * reduce(b)); }

Poly PolyModulus::pow(const Poly& base, const BigInt& e) const {
  if (e < 0) throw UsageError("negative exponent");
  Poly result = reduce(Poly::constant(p(), 1));
  if (e == 0) return result;
  const Poly b = reduce(base);
  const auto top = static_cast<long>(boost::multiprecision::msb(e));
  for (long i = top; i >= 0; --i) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mul(result, b);
  }
  return result;
}

Poly PolyModulus::pow(const Poly& base, u64 e) const { return pow(base, BigInt(e)); }

// ---------------------------------------------------------------- FrobeniusMap

FrobeniusMap::FrobeniusMap(const PolyModulus& mod) : p_(mod.p()), n_(mod.degree()) {
  const Poly xp = mod.pow(Poly::x(p_), p_);
  Poly cur = mod.reduce(Poly::constant(p_, 1));
  cols_.reserve(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    cols_.push_back(padded(cur, n_));
    if (j + 1 < n_) cur = mod.mul(cur, xp);
  }
}

Poly FrobeniusMap::apply(const Poly& g) const {
  std::vector<u128> acc(static_cast<std::size_t>(n_), 0);
  for (int j = 0; j <= g.degree() && j < n_; ++j) {
    const u64 c = g.coeff(j);
    if (c == 0) continue;
    const auto& col = cols_[j];
    for (int i = 0; i < n_; ++i) acc[i] += static_cast<u128>(c * col[i]);
  }
  std::vector<u64> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[i] = static_cast<u64>(acc[i] % p_);
  return Poly(p_, std::move(out));
}

Poly FrobeniusMap::apply(const Poly& g, int times) const {
  Poly r = g;
  for (int t = 0; t < times; ++t) r = apply(r);
  return r;
}

// ---------------------------------------------------------------- irreducibility

bool is_irreducible(const Poly& f_in) {
  if (f_in.degree() < 1) throw UsageError("irreducibility of a constant polynomial is undefined");
  const Poly f = f_in.monic();
  const int n = f.degree();
  if (n == 1) return true;
  if (f.coeff(0) == 0) return false;

  const u64 p = f.modulus();
  const PolyModulus mod(f);
  const FrobeniusMap frob(mod);
  const Poly x = Poly::x(p);
  const auto primes = prime_divisors(n);

  std::vector<Poly> wanted;  // x^(p^(n/r)) mod f
  Poly h = x;
  for (int i = 1; i <= n; ++i) {
    h = frob.apply(h);
    for (int r : primes) {
      if (i == n / r) wanted.push_back(h);
    }
    // A root of f in F_p already means a linear factor.
    if (i == 1 && !gcd(h - x, f).is_one()) return false;
  }
  if (h != mod.reduce(x)) return false;
  for (const auto& w : wanted) {
    if (!gcd(w - x, f).is_one()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Cantor-Zassenhaus

std::vector<Poly> equal_degree_factorize(const Poly& f_in, int d, u64 seed) {
  if (d < 1) throw UsageError("factor degree must be positive");
  if (f_in.degree() < 1) throw UsageError("cannot factor a constant polynomial");
  const Poly f = f_in.monic();
  const int n = f.degree();
  if (n % d != 0) {
    throw MalformedInput("degree " + std::to_string(n) + " is not a multiple of " + std::to_string(d));
  }
  if (n == d) return {f};

  const u64 p = f.modulus();
  const PolyModulus mod(f);
  const FrobeniusMap frob(mod);
  std::mt19937_64 rng(seed);
  const Poly one = Poly::constant(p, 1);

  std::vector<Poly> done;
  std::vector<Poly> pending{f};
  const int max_rounds = 64 + 8 * (n / d);
  for (int round = 0; round < max_rounds && !pending.empty(); ++round) {
    std::vector<u64> coeffs(static_cast<std::size_t>(n));
    for (auto& c : coeffs) c = rng() % p;
    const Poly a(p, std::move(coeffs));
    if (a.degree() < 1) continue;

    // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
    Poly conj = a;
    Poly norm = a;
    for (int j = 1; j < d; ++j) {
      conj = frob.apply(conj);
      norm = mod.mul(norm, conj);
    }
    const Poly b = mod.pow(norm, (p - 1) / 2) - one;

    std::vector<Poly> next;
    for (auto& g : pending) {
      const Poly h = gcd(b % g, g);
      if (h.degree() <= 0 || h.degree() == g.degree()) {
        next.push_back(std::move(g));
        continue;
      }
      if (h.degree() % d != 0) {
        throw MalformedInput("equal-degree split produced a factor of degree " + std::to_string(h.degree()) +
                             ", not a multiple of " + std::to_string(d));
      }
      for (Poly part : {h, g / h}) {
        if (part.degree() == d)
          done.push_back(std::move(part));
        else
          next.push_back(std::move(part));
      }
    }
    pending = std::move(next);
  }
  if (!pending.empty()) {
    throw MalformedInput("equal-degree factorization did not converge; input is not a product of distinct degree-" +
                         std::to_string(d) + " irreducibles");
  }
  std::sort(done.begin(), done.end(), canonical_less);
  return done;
}

Poly first_irreducible(u64 p, int degree) {
  require_odd_prime(p);
  if (degree < 1) throw UsageError("degree must be positive");
  std::vector<u64> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  while (true) {
    Poly f(p, c);
    if (is_irreducible(f)) return f;
    int i = 0;
    while (i < degree && ++c[i] == p) c[i++] = 0;
    if (i == degree) throw InternalError("no irreducible polynomial found");
  }
}

}  // namespace qkforge
