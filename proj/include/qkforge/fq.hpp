#pragma once

// The extension field F_{p^n} = F_p[x]/(modulus).

#include <memory>

#include "qkforge/ffpoly.hpp"

namespace qkforge {

class ExtField;
using FieldRef = std::shared_ptr<const ExtField>;

class ExtField {
 public:
  /// Validates that modulus is monic and irreducible.
  static FieldRef make(const Poly& modulus);

  u64 p() const { return mod_.p(); }
  int degree() const { return mod_.degree(); }
  const Poly& modulus() const { return mod_.poly(); }
  const PolyModulus& arithmetic() const { return mod_; }
  /// p^n; callers are expected to stay well below 2^64.
  u64 size() const;

 private:
  explicit ExtField(Poly modulus) : mod_(std::move(modulus)) {}
  PolyModulus mod_;
};

/// Element of F_{p^n}, represented by a polynomial of degree < n.
class FqElem {
 public:
  FqElem(FieldRef field, const Poly& rep);

  static FqElem zero(FieldRef field);
  static FqElem one(FieldRef field);
  /// The class of x.
  static FqElem generator(FieldRef field);
  static FqElem embed(FieldRef field, FpElem c);
  /// Inverse of index(): base-p digits of the index are the coefficients.
  static FqElem from_index(FieldRef field, u64 index);

  const FieldRef& field() const { return field_; }
  const Poly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  /// Canonical enumeration index: sum of c_j p^j.
  u64 index() const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator*(FpElem s) const;
  FqElem operator-() const;
  /// Throws UsageError on zero.
  FqElem inverse() const;
  FqElem pow(const BigInt& e) const;
  FqElem frobenius() const { return pow(BigInt(field_->p())); }

  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.field_->modulus() == b.field_->modulus() && a.rep_ == b.rep_;
  }

 private:
  void check_same(const FqElem& o) const;

  FieldRef field_;
  Poly rep_;
};

/// Monic minimal polynomial of beta over F_p.
Poly min_poly_of_element(const FqElem& beta);

}  // namespace qkforge
