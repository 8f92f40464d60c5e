#pragma once

// Truncated Laurent series over F_q in the uniformizer t (often written ϖ).
//
// Every series is known modulo t^prec. Arithmetic computes the exact
// precision implied by its operands and never invents coefficients: reading
// a coefficient at or beyond the precision throws InsufficientPrecision.
//
// The formal derivative is d(t^i)/dt = i t^{i-1}.

#include <map>
#include <vector>

#include "aschar/gf2e.hpp"

namespace aschar {

class LaurentSeries {
 public:
  static LaurentSeries zero(FieldPtr field, int prec);
  static LaurentSeries one(FieldPtr field, int prec) { return monomial(std::move(field), 1, 0, prec); }
  static LaurentSeries monomial(FieldPtr field, Bits coeff, int exponent, int prec);
  // Terms at exponents >= prec are rejected with InsufficientPrecision.
  static LaurentSeries from_terms(FieldPtr field, const std::map<int, Bits>& terms, int prec);

  const FieldPtr& field() const { return field_; }
  int prec() const { return prec_; }
  bool is_zero() const { return zero_; }
  // Valuation of a nonzero series; for a series that is zero to precision
  // this returns prec (the valuation is only known to be at least that).
  int valuation() const { return zero_ ? prec_ : val_; }
  // prec - valuation for nonzero series, 0 otherwise.
  int relative_prec() const { return zero_ ? 0 : prec_ - val_; }

  Bits coeff(int exponent) const;
  GF2eElem coefficient(int exponent) const { return {field_, coeff(exponent)}; }
  Bits leading_coeff() const { return zero_ ? 0 : coeffs_.front(); }
  std::map<int, Bits> terms() const;  // nonzero coefficients only

  // Forgets everything at exponents >= new_prec; new_prec may not exceed prec.
  LaurentSeries truncated(int new_prec) const;
  // Substitution t -> c t for a nonzero constant c.
  LaurentSeries rescaled(Bits c) const;
  // Exact squaring: in characteristic 2, (g + O(t^p))^2 = g^2 + O(t^{2p}).
  LaurentSeries square() const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

 private:
  LaurentSeries(FieldPtr field, int start, std::vector<Bits> coeffs, int prec);

  FieldPtr field_;
  int val_ = 0;
  int prec_ = 0;
  bool zero_ = true;
  std::vector<Bits> coeffs_;  // exponents val_ .. prec_-1
};

// Subtraction coincides with addition in characteristic 2.
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + b; }

// Multiplicative inverse; ZeroInversion if a is zero to precision.
LaurentSeries invert(const LaurentSeries& a);
LaurentSeries derivative(const LaurentSeries& a);
// Coefficient at t^-1.
GF2eElem residue(const LaurentSeries& a);

// a = t^k θ_0 ∏_{1 <= i < prec-k} (1 + θ_i t^i) modulo t^prec.
struct ProductExpansion {
  FieldPtr field;
  int k = 0;
  Bits theta0 = 1;
  std::vector<Bits> thetas;  // thetas[i-1] = θ_i
  int prec = 0;

  // θ_i for 0 <= i < prec - k.
  Bits theta(int i) const;
  int determined_through() const { return prec - k - 1; }
};

ProductExpansion product_expansion(const LaurentSeries& a);
LaurentSeries from_product(const ProductExpansion& e);

}  // namespace aschar
