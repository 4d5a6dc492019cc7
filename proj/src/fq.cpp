#include "qkforge/fq.hpp"

namespace qkforge {

FieldRef ExtField::make(const Poly& modulus) {
  require_odd_prime(modulus.modulus());
  if (modulus.degree() < 1 || !modulus.is_monic()) {
    throw UsageError("field modulus must be monic of positive degree");
  }
  if (!is_irreducible(modulus)) throw UsageError("field modulus " + to_human(modulus) + " is reducible");
  return FieldRef(new ExtField(modulus));
}

u64 ExtField::size() const {
  u64 q = 1;
  for (int i = 0; i < degree(); ++i) {
    if (q > ~0ULL / p()) throw ResourceError("field size exceeds 64 bits");
    q *= p();
  }
  return q;
}

FqElem::FqElem(FieldRef field, const Poly& rep) : field_(std::move(field)), rep_(field_->arithmetic().reduce(rep)) {}

FqElem FqElem::zero(FieldRef field) {
  const u64 p = field->p();
  return {std::move(field), Poly(p)};
}

FqElem FqElem::one(FieldRef field) {
  const u64 p = field->p();
  return {std::move(field), Poly::constant(p, 1)};
}

FqElem FqElem::generator(FieldRef field) {
  const u64 p = field->p();
  return {std::move(field), Poly::x(p)};
}

FqElem FqElem::embed(FieldRef field, FpElem c) {
  if (c.modulus() != field->p()) throw UsageError("embedding an element of the wrong prime field");
  return {std::move(field), Poly::constant(c.modulus(), c.value())};
}

FqElem FqElem::from_index(FieldRef field, u64 index) {
  const u64 p = field->p();
  std::vector<u64> c(static_cast<std::size_t>(field->degree()), 0);
  for (auto& d : c) {
    d = index % p;
    index /= p;
  }
  if (index != 0) throw UsageError("element index out of range");
  return {std::move(field), Poly(p, std::move(c))};
}

u64 FqElem::index() const {
  const u64 p = field_->p();
  u64 idx = 0;
  for (int i = rep_.degree(); i >= 0; --i) idx = idx * p + rep_.coeff(i);
  return idx;
}

void FqElem::check_same(const FqElem& o) const {
  if (field_ != o.field_ && field_->modulus() != o.field_->modulus()) {
    throw UsageError("elements of different fields");
  }
}

FqElem FqElem::operator+(const FqElem& o) const {
  check_same(o);
  return {field_, rep_ + o.rep_};
}

FqElem FqElem::operator-(const FqElem& o) const {
  check_same(o);
  return {field_, rep_ - o.rep_};
}

FqElem FqElem::operator*(const FqElem& o) const {
  check_same(o);
  return {field_, field_->arithmetic().mul(rep_, o.rep_)};
}

FqElem FqElem::operator*(FpElem s) const {
  if (s.modulus() != field_->p()) throw UsageError("scalar from the wrong prime field");
  return {field_, rep_ * s.value()};
}

FqElem FqElem::operator-() const { return {field_, -rep_}; }

FqElem FqElem::inverse() const {
  if (is_zero()) throw UsageError("inverse of zero in F_q");
  // Extended Euclid tracking only the coefficient of rep_.
  const u64 p = field_->p();
  Poly r0 = field_->modulus(), r1 = rep_;
  Poly s0(p), s1 = Poly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because the modulus is irreducible.
  return {field_, s0 * modp::inv(r0.coeff(0), p)};
}

FqElem FqElem::pow(const BigInt& e) const { return {field_, field_->arithmetic().pow(rep_, e)}; }

Poly min_poly_of_element(const FqElem& beta) {
  const u64 p = beta.field()->p();
  const int n = beta.field()->degree();

  int d = 1;
  for (FqElem c = beta.frobenius(); !(c == beta); c = c.frobenius()) {
    ++d;
    if (d > n) throw InternalError("Frobenius orbit longer than the field degree");
  }

  // Solve sum_{j<d} c_j beta^j = -beta^d over F_p (n equations, d unknowns).
  std::vector<std::vector<u64>> m(static_cast<std::size_t>(n), std::vector<u64>(static_cast<std::size_t>(d) + 1, 0));
  FqElem pw = FqElem::one(beta.field());
  for (int j = 0; j <= d; ++j) {
    for (int i = 0; i < n; ++i) m[i][j] = j < d ? pw.rep().coeff(i) : modp::neg(pw.rep().coeff(i), p);
    pw = pw * beta;
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < d && row < n; ++col) {
    int sel = row;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[row]);
    const u64 inv = modp::inv(m[row][col], p);
    for (auto& v : m[row]) v = modp::mul(v, inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const u64 f = m[r][col];
      for (int c = 0; c <= d; ++c) m[r][c] = modp::sub(m[r][c], modp::mul(f, m[row][c], p), p);
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivot_col.size()) != d) throw InternalError("conjugate powers are linearly dependent");

  std::vector<u64> coeffs(static_cast<std::size_t>(d) + 1, 0);
  for (int r = 0; r < d; ++r) coeffs[pivot_col[r]] = m[r][d];
  coeffs[d] = 1;
  return Poly(p, std::move(coeffs));
}

}  // namespace qkforge
