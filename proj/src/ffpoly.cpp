#include "qkforge/ffpoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace qkforge {

namespace modp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw UsageError("inverse of zero in F_" + std::to_string(p));
  return pow(a, p - 2, p);
}

u64 reduce(i64 a, u64 p) {
  i64 r = a % static_cast<i64>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(p) : r);
}

}  // namespace modp

namespace {

using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_odd_prime(u64 p) {
  if (p < 3 || p >= (1ULL << 31) || !is_prime(p)) {
    throw UsageError("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

// ---------------------------------------------------------------- FpElem

FpElem::FpElem(i64 value, u64 p) : value_(0), p_(p) {
  require_odd_prime(p);
  value_ = modp::reduce(value, p);
}

void FpElem::check_same(FpElem o) const {
  if (o.p_ != p_) throw UsageError("mismatched field moduli");
}

FpElem FpElem::operator+(FpElem o) const {
  check_same(o);
  return {Raw{}, modp::add(value_, o.value_, p_), p_};
}
FpElem FpElem::operator-(FpElem o) const {
  check_same(o);
  return {Raw{}, modp::sub(value_, o.value_, p_), p_};
}
FpElem FpElem::operator*(FpElem o) const {
  check_same(o);
  return {Raw{}, modp::mul(value_, o.value_, p_), p_};
}
FpElem FpElem::operator/(FpElem o) const { return *this * o.inverse(); }
FpElem FpElem::operator-() const { return {Raw{}, modp::neg(value_, p_), p_}; }
FpElem FpElem::inverse() const { return {Raw{}, modp::inv(value_, p_), p_}; }
FpElem FpElem::pow(u64 e) const { return {Raw{}, modp::pow(value_, e, p_), p_}; }

std::optional<FpElem> sqrt_mod_p(FpElem a) {
  const u64 p = a.modulus();
  const u64 v = a.value();
  if (v == 0) return a;
  if (modp::pow(v, (p - 1) / 2, p) != 1) return std::nullopt;

  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (modp::pow(z, (p - 1) / 2, p) != p - 1) ++z;

  u64 m = static_cast<u64>(s);
  u64 c = modp::pow(z, q, p);
  u64 t = modp::pow(v, q, p);
  u64 r = modp::pow(v, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = modp::mul(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + 1 < m - i; ++j) b = modp::mul(b, b, p);
    m = i;
    c = modp::mul(b, b, p);
    t = modp::mul(t, c, p);
    r = modp::mul(r, b, p);
  }
  if (r > (p - 1) / 2) r = p - r;
  return FpElem(static_cast<i64>(r), p);
}

// ---------------------------------------------------------------- Poly

Poly::Poly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

Poly Poly::from_signed(u64 p, const std::vector<i64>& coeffs) {
  std::vector<u64> c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = modp::reduce(coeffs[i], p);
  return Poly(p, std::move(c));
}

Poly Poly::constant(u64 p, u64 c) { return Poly(p, std::vector<u64>{c}); }

Poly Poly::monomial(u64 p, int degree, u64 c) {
  std::vector<u64> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return Poly(p, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (o.p_ != p_) {
    throw UsageError("mismatched moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
  }
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * modp::inv(lead(), p_);
}

u64 Poly::eval(u64 x) const {
  u64 r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = modp::add(modp::mul(r, x, p_), *it, p_);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = modp::neg(c, p_);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = modp::add(c_[i], o.c_[i], p_);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = modp::sub(c_[i], o.c_[i], p_);
  trim();
  return *this;
}

Poly& Poly::operator*=(u64 s) {
  s %= p_;
  for (auto& c : c_) c = modp::mul(c, s, p_);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  const u64 p = a.p_;
  if (a.is_zero() || b.is_zero()) return Poly(p);
  const std::size_t na = a.c_.size(), nb = b.c_.size();
  std::vector<u64> out(na + nb - 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t lo = k >= nb - 1 ? k - (nb - 1) : 0;
    const std::size_t hi = std::min(k, na - 1);
    unsigned __int128 acc = 0;
    for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<unsigned __int128>(a.c_[i] * b.c_[k - i]);
    out[k] = static_cast<u64>(acc % p);
  }
  return Poly(p, std::move(out));
}

bool canonical_less(const Poly& a, const Poly& b) {
  return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (b.is_zero()) throw UsageError("division by the zero polynomial");
  const u64 p = a.modulus();
  if (a.degree() < b.degree()) return {Poly(p), a};
  std::vector<u64> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const int db = b.degree();
  const u64 inv_lead = modp::inv(b.lead(), p);
  std::vector<u64> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    const u64 c = modp::mul(r[i], inv_lead, p);
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = modp::sub(r[i - db + j], modp::mul(c, bc[j], p), p);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(p, std::move(q)), Poly(p, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
  a.check_same(b);
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly derivative(const Poly& f) {
  const u64 p = f.modulus();
  std::vector<u64> d;
  for (int i = 1; i <= f.degree(); ++i) d.push_back(modp::mul(static_cast<u64>(i) % p, f.coeff(i), p));
  return Poly(p, std::move(d));
}

Poly reciprocal(const Poly& f) {
  std::vector<u64> c(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly(f.modulus(), std::move(c));
}

bool is_palindromic(const Poly& f) {
  auto c = f.coeffs();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

Poly poly_mod_pow(const Poly& base, const BigInt& e, const Poly& modulus) {
  if (modulus.is_zero()) throw UsageError("poly_mod_pow: zero modulus");
  base.check_same(modulus);
  if (e < 0) throw UsageError("poly_mod_pow: negative exponent");
  const u64 p = modulus.modulus();
  if (modulus.degree() == 0) return Poly(p);
  return PolyModulus(modulus.monic()).pow(base, e);
}

// ---------------------------------------------------------------- text I/O

namespace {

i64 parse_int(std::string_view s, std::string_view whole) {
  i64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("cannot parse polynomial '" + std::string(whole) + "'");
  }
  return v;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

}  // namespace

Poly parse_poly(std::string_view text, u64 p) {
  const std::string s = strip(text);
  if (s.empty()) throw UsageError("empty polynomial text");

  if (s.find('x') == std::string::npos) {
    std::vector<i64> coeffs;
    std::size_t start = 0;
    while (true) {
      const auto comma = s.find(',', start);
      coeffs.push_back(parse_int(std::string_view(s).substr(start, comma - start), text));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return Poly::from_signed(p, coeffs);
  }

  // Human form: signed terms c*x^e, c*x, x^e, x, c.
  std::vector<i64> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    i64 sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    const std::string_view term = std::string_view(s).substr(i, j - i);
    if (term.empty()) throw UsageError("cannot parse polynomial '" + std::string(text) + "'");
    i = j;

    i64 coef = 1;
    i64 exponent = 0;
    const auto xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      coef = parse_int(term, text);
    } else {
      std::string_view head = term.substr(0, xpos);
      if (!head.empty() && head.back() == '*') head.remove_suffix(1);
      if (!head.empty()) coef = parse_int(head, text);
      const std::string_view tail = term.substr(xpos + 1);
      if (tail.empty()) {
        exponent = 1;
      } else if (tail.size() > 1 && tail[0] == '^') {
        exponent = parse_int(tail.substr(1), text);
      } else {
        throw UsageError("cannot parse polynomial '" + std::string(text) + "'");
      }
    }
    if (exponent < 0) throw UsageError("negative exponent in '" + std::string(text) + "'");
    if (static_cast<std::size_t>(exponent) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(exponent) + 1, 0);
    coeffs[static_cast<std::size_t>(exponent)] += sign * coef;
  }
  return Poly::from_signed(p, coeffs);
}

std::string to_csv(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i) os << ',';
    os << f.coeff(i);
  }
  return os.str();
}

std::string to_human(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const u64 c = f.coeff(i);
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace qkforge
