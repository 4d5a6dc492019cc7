#include "qkforge/qk_core.hpp"

#include <algorithm>
#include <cctype>

namespace qkforge {

namespace {

void require_nonzero(FpElem k) {
  if (k.is_zero()) throw UsageError("multiplier k must be nonzero");
}

bool c3_equation(FpElem k) {
  const u64 p = k.modulus();
  const FpElem half = FpElem(2, p).inverse();
  return (k * k + k * half + half).is_zero();
}

}  // namespace

std::string to_string(KClassTag tag) {
  switch (tag) {
    case KClassTag::C1: return "C1";
    case KClassTag::C2: return "C2";
    case KClassTag::C3: return "C3";
    case KClassTag::C3Minus: return "C3-";
    case KClassTag::Generic: return "Generic";
  }
  return "?";
}

KClassTag parse_class_tag(const std::string& token) {
  std::string t;
  for (char ch : token) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (t == "c1") return KClassTag::C1;
  if (t == "c2") return KClassTag::C2;
  if (t == "c3") return KClassTag::C3;
  if (t == "c3-" || t == "c3minus") return KClassTag::C3Minus;
  if (t == "generic") return KClassTag::Generic;
  throw UsageError("unknown class token '" + token + "' (expected c1, c2, c3 or c3-)");
}

bool supports_class(u64 p, KClassTag tag) {
  switch (tag) {
    case KClassTag::C1: return true;
    case KClassTag::C2: return p % 4 == 1;
    case KClassTag::C3:
    case KClassTag::C3Minus: return p % 7 == 1 || p % 7 == 2 || p % 7 == 4;
    case KClassTag::Generic: return true;
  }
  return false;
}

std::string required_congruence(KClassTag tag) {
  switch (tag) {
    case KClassTag::C2: return "p = 1 (mod 4)";
    case KClassTag::C3:
    case KClassTag::C3Minus: return "p = 1, 2 or 4 (mod 7)";
    default: return "none";
  }
}

ProjValue theta_eval(const ProjValue& x, FpElem k) {
  require_nonzero(k);
  if (x.is_infinity() || x.value().is_zero()) return ProjValue::infinity();
  const FqElem& v = x.value();
  return ProjValue::finite((v + v.inverse()) * k);
}

Poly qk_transform(const Poly& f, FpElem k) {
  require_nonzero(k);
  const u64 p = k.modulus();
  if (f.modulus() != p) throw UsageError("polynomial and multiplier live over different primes");
  if (f.degree() < 1) throw UsageError("Q_k-transform of a constant polynomial");
  const Poly g = f.monic();
  const int n = g.degree();

  // sum_i a_i k^i x^(n-i) (x^2+1)^i, then scale by k^-n.
  std::vector<u64> acc(static_cast<std::size_t>(2 * n) + 1, 0);
  std::vector<u64> pw{1};  // (x^2+1)^i
  u64 ki = 1;
  for (int i = 0; i <= n; ++i) {
    const u64 c = modp::mul(g.coeff(i), ki, p);
    if (c != 0) {
      for (std::size_t j = 0; j < pw.size(); ++j) {
        const std::size_t at = j + static_cast<std::size_t>(n - i);
        acc[at] = modp::add(acc[at], modp::mul(c, pw[j], p), p);
      }
    }
    std::vector<u64> next(pw.size() + 2, 0);
    for (std::size_t j = 0; j < pw.size(); ++j) {
      next[j] = modp::add(next[j], pw[j], p);
      next[j + 2] = modp::add(next[j + 2], pw[j], p);
    }
    pw = std::move(next);
    ki = modp::mul(ki, k.value(), p);
  }
  const u64 scale = modp::inv(modp::pow(k.value(), static_cast<u64>(n), p), p);
  return Poly(p, std::move(acc)) * scale;
}

std::vector<FpElem> find_k(u64 p, KClassTag tag) {
  require_odd_prime(p);
  if (!supports_class(p, tag)) {
    throw UnsupportedPrime("class " + to_string(tag) + " needs " + required_congruence(tag) + "; p = " +
                           std::to_string(p) + " does not qualify");
  }
  const FpElem half = FpElem(2, p).inverse();
  std::vector<FpElem> out;
  switch (tag) {
    case KClassTag::C1:
      out = {half, -half};
      break;
    case KClassTag::C2: {
      const auto r = sqrt_mod_p(-(half * half));
      if (!r) throw InternalError("-1/4 is not a square although p = 1 (mod 4)");
      out = {*r, -*r};
      break;
    }
    case KClassTag::C3:
    case KClassTag::C3Minus: {
      const auto s = sqrt_mod_p(FpElem(-7, p));
      if (!s) throw InternalError("-7 is not a square although p = 1, 2, 4 (mod 7)");
      const FpElem quarter = half * half;
      out = {(FpElem(-1, p) + *s) * quarter, (FpElem(-1, p) - *s) * quarter};
      if (tag == KClassTag::C3Minus) {
        for (auto& k : out) k = -k;
      }
      break;
    }
    case KClassTag::Generic:
      throw UsageError("find_k needs a concrete class, not Generic");
  }
  std::sort(out.begin(), out.end(), [](FpElem a, FpElem b) { return a.value() < b.value(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<KClassTag> class_predicates(FpElem k) {
  require_nonzero(k);
  const u64 p = k.modulus();
  std::vector<KClassTag> tags;
  const FpElem two_k = k * FpElem(2, p);
  if (two_k == FpElem(1, p) || two_k == FpElem(-1, p)) tags.push_back(KClassTag::C1);
  const FpElem quarter = FpElem(4, p).inverse();
  if (supports_class(p, KClassTag::C2) && (k * k + quarter).is_zero()) tags.push_back(KClassTag::C2);
  if (supports_class(p, KClassTag::C3) && c3_equation(k)) tags.push_back(KClassTag::C3);
  if (supports_class(p, KClassTag::C3Minus) && c3_equation(-k)) tags.push_back(KClassTag::C3Minus);
  return tags;
}

KClass classify_k(FpElem k) {
  const auto tags = class_predicates(k);
  return {tags.empty() ? KClassTag::Generic : tags.front(), k};
}

Poly min_poly_theta(const Poly& f, FpElem k) {
  require_nonzero(k);
  if (f.degree() < 1) throw UsageError("min_poly_theta needs a non-constant polynomial");
  const Poly g = f.monic();
  if (g == Poly::x(g.modulus())) throw UsageError("min_poly_theta is undefined for f = x");
  const FieldRef field = ExtField::make(g);
  const ProjValue image = theta_eval(ProjValue::finite(FqElem::generator(field)), k);
  return min_poly_of_element(image.value());
}

}  // namespace qkforge
