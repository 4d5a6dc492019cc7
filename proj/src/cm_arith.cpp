#include "qkforge/cm_arith.hpp"

#include <sstream>

namespace qkforge {

QuadInt::QuadInt(BigInt a, BigInt b, int disc) : a_(std::move(a)), b_(std::move(b)), disc_(disc) {
  if (disc != -4 && disc != -7) throw UsageError("unsupported discriminant " + std::to_string(disc));
}

void QuadInt::check_same(const QuadInt& o) const {
  if (o.disc_ != disc_) throw UsageError("quadratic integers from different orders");
}

QuadInt QuadInt::conj() const {
  if (disc_ == -4) return {a_, -b_, disc_};
  return {a_ + b_, -b_, disc_};
}

BigInt QuadInt::trace() const { return disc_ == -4 ? BigInt(2 * a_) : BigInt(2 * a_ + b_); }

QuadInt QuadInt::operator+(const QuadInt& o) const {
  check_same(o);
  return {a_ + o.a_, b_ + o.b_, disc_};
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
  check_same(o);
  return {a_ - o.a_, b_ - o.b_, disc_};
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
  check_same(o);
  const BigInt bd = b_ * o.b_;
  if (disc_ == -4) return {a_ * o.a_ - bd, a_ * o.b_ + b_ * o.a_, disc_};
  return {a_ * o.a_ - 2 * bd, a_ * o.b_ + b_ * o.a_ + bd, disc_};
}

QuadInt QuadInt::pow(u64 e) const {
  QuadInt result = from_int(1, disc_);
  QuadInt base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string QuadInt::str() const {
  std::ostringstream os;
  os << a_ << (b_ < 0 ? "-" : "+") << abs(b_) << (disc_ == -4 ? "*i" : "*w");
  return os.str();
}

BigInt norm(const QuadInt& z) {
  if (z.disc() == -4) return z.a() * z.a() + z.b() * z.b();
  return z.a() * z.a() + z.a() * z.b() + 2 * z.b() * z.b();
}

int nu2(const BigInt& m) {
  if (m == 0) throw UsageError("2-adic valuation of zero");
  return static_cast<int>(boost::multiprecision::lsb(abs(m)));
}

const CurveSpec& curve_for(KClassTag tag) {
  switch (tag) {
    case KClassTag::C2: return kCurveC2;
    case KClassTag::C3:
    case KClassTag::C3Minus: return kCurveC3;
    default: throw UsageError("no CM curve attached to class " + to_string(tag));
  }
}

u64 count_points(const CurveSpec& curve, u64 p) {
  require_odd_prime(p);
  const u64 a4 = modp::reduce(curve.a4, p);
  const u64 a6 = modp::reduce(curve.a6, p);
  // 4 a4^3 + 27 a6^2
  const u64 disc = modp::add(modp::mul(4, modp::pow(a4, 3, p), p), modp::mul(27, modp::mul(a6, a6, p), p), p);
  if (disc == 0) throw UsageError("curve is singular modulo " + std::to_string(p));

  std::vector<char> is_square(p, 0);
  for (u64 y = 1; y <= p / 2; ++y) is_square[modp::mul(y, y, p)] = 1;

  i64 sum = 0;
  for (u64 x = 0; x < p; ++x) {
    const u64 rhs = modp::add(modp::mul(modp::add(modp::mul(x, x, p), a4, p), x, p), a6, p);
    if (rhs != 0) sum += is_square[rhs] ? 1 : -1;
  }
  return static_cast<u64>(static_cast<i64>(p) + 1 + sum);
}

namespace {

BigInt exact_isqrt(const BigInt& v, const char* what) {
  if (v < 0) throw InternalError(std::string("negative radicand while solving ") + what);
  const BigInt r = boost::multiprecision::sqrt(v);
  if (r * r != v) throw InternalError(std::string("no integral solution for ") + what);
  return r;
}

}  // namespace

QuadInt frobenius_pi(u64 p, KClassTag tag) {
  if (!supports_class(p, tag) || (tag != KClassTag::C2 && tag != KClassTag::C3 && tag != KClassTag::C3Minus)) {
    throw UsageError("Frobenius element unavailable for class " + to_string(tag) + " at p = " + std::to_string(p));
  }
  const CurveSpec& curve = curve_for(tag);
  const BigInt ap = BigInt(p) + 1 - BigInt(count_points(curve, p));
  if (tag == KClassTag::C2) {
    if (ap % 2 != 0) throw InternalError("odd trace for y^2 = x^3 + x");
    const BigInt a = ap / 2;
    const BigInt b = exact_isqrt(BigInt(p) - a * a, "a^2 + b^2 = p");
    return {a, b, -4};
  }
  // 4p = (2u+v)^2 + 7 v^2 with 2u + v = a_p.
  const BigInt rad = 4 * BigInt(p) - ap * ap;
  if (rad % 7 != 0) throw InternalError("4p - a_p^2 not divisible by 7");
  const BigInt v = exact_isqrt(rad / 7, "u^2 + uv + 2v^2 = p");
  if ((ap - v) % 2 != 0) throw InternalError("a_p - v is odd");
  return {(ap - v) / 2, v, -7};
}

QuadInt rho0_select(FpElem k, const QuadInt& pi) {
  if (pi.disc() != -7) throw UsageError("rho0_select needs a Frobenius element of Z[(1+sqrt(-7))/2]");
  const u64 p = k.modulus();
  const FpElem sigma = k * FpElem(2, p) + FpElem(1, p);
  const FpElem u(static_cast<i64>(pi.a() % p), p);
  const FpElem v(static_cast<i64>(pi.b() % p), p);
  if (v.is_zero()) throw InternalError("second coordinate of pi divisible by p");
  // pi = u + v w = 0 in R/pi  =>  w = -u/v
  const FpElem w_res = -u / v;
  if (w_res == sigma) return QuadInt::omega(-7);
  if (FpElem(1, p) - w_res == sigma) return QuadInt::omega(-7).conj();
  throw InternalError("neither w nor its conjugate is congruent to 2k+1 mod pi; k is not a C3 root for this pi");
}

int rho_valuation(QuadInt z, const QuadInt& rho) {
  if (norm(rho) != 2) throw UsageError("rho_valuation needs an element of norm 2");
  if (z.is_zero()) throw UsageError("valuation of zero is infinite");
  const QuadInt rc = rho.conj();
  int e = 0;
  while (true) {
    const QuadInt t = z * rc;
    if (t.a() % 2 != 0 || t.b() % 2 != 0) return e;
    z = QuadInt(t.a() / 2, t.b() / 2, t.disc());
    ++e;
  }
}

namespace {

KClassTag depth_class(FpElem k) {
  const KClassTag tag = classify_k(k).tag;
  if (tag != KClassTag::C2 && tag != KClassTag::C3 && tag != KClassTag::C3Minus) {
    throw UsageError("depths are defined only for classes C2, C3, C3-; k = " + std::to_string(k.value()) +
                     " is " + to_string(tag));
  }
  return tag;
}

DepthDetail compute(FpElem k, int n, KClassTag tag, const QuadInt& pi) {
  if (n < 1) throw UsageError("degree n must be positive");
  const u64 p = k.modulus();
  const QuadInt one = QuadInt::from_int(1, pi.disc());
  const QuadInt pn = pi.pow(static_cast<u64>(n));
  DepthDetail d{{0, 0, p, n, tag}, pi.trace(), pi, std::nullopt};
  if (tag == KClassTag::C2) {
    d.depths.e0 = nu2(norm(pn - one));
    d.depths.e1 = nu2(norm(pn + one));
  } else {
    const FpElem root = tag == KClassTag::C3Minus ? -k : k;
    const QuadInt rho = rho0_select(root, pi);
    d.rho0 = rho;
    d.depths.e0 = rho_valuation(pn - one, rho);
    d.depths.e1 = rho_valuation(pn + one, rho);
  }
  return d;
}

}  // namespace

DepthDetail depth_detail(FpElem k, int n, int max_degree) {
  if (n > max_degree) {
    throw ResourceError("degree " + std::to_string(n) + " exceeds the configured cap " + std::to_string(max_degree));
  }
  const KClassTag tag = depth_class(k);
  return compute(k, n, tag, frobenius_pi(k.modulus(), tag));
}

DepthPair depths(FpElem k, int n, int max_degree) { return depth_detail(k, n, max_degree).depths; }

DepthPair depths_with_pi(FpElem k, int n, const QuadInt& pi) {
  const KClassTag tag = depth_class(k);
  if (norm(pi) != BigInt(k.modulus())) throw UsageError("supplied pi does not have norm p");
  return compute(k, n, tag, pi).depths;
}

}  // namespace qkforge
