#pragma once

// Arithmetic in F_q = F_{2^f}. Elements are bit-packed polynomials in the
// root u of a fixed irreducible modulus: bit i is the coefficient of u^i.

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "aschar/errors.hpp"

namespace aschar {

using Bits = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr int kMaxDegree = 32;
  // Degrees up to this bound use log/antilog tables for multiplication.
  static constexpr int kTableDegree = 8;

  // Builds F_{2^f}. Without an explicit modulus only f <= 4 is accepted:
  // f=1 -> x+1, f=2 -> x^2+x+1, f=3 -> x^3+x+1, f=4 -> x^4+x+1.
  // Throws InvalidField for a reducible or wrongly sized modulus.
  static FieldPtr make(int f, std::optional<std::uint64_t> modulus_bits = std::nullopt);

  static std::optional<std::uint64_t> default_modulus(int f);

  int degree() const { return f_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t order() const { return std::uint64_t{1} << f_; }
  bool contains(std::uint64_t a) const { return a < order(); }

  bool same_as(const Field& other) const {
    return f_ == other.f_ && modulus_ == other.modulus_;
  }

  Bits add(Bits a, Bits b) const { return a ^ b; }
  Bits mul(Bits a, Bits b) const;
  Bits square(Bits a) const { return mul(a, a); }
  Bits inv(Bits a) const;  // DivisionByZero for 0
  Bits pow(Bits a, std::int64_t e) const;  // negative e inverts first
  Bits sqrt(Bits a) const;
  bool trace(Bits a) const { return __builtin_parityll(a & trace_mask_) != 0; }

  // Schoolbook multiply-and-reduce, independent of the tables.
  Bits mul_plain(Bits a, Bits b) const;

 private:
  Field(int f, std::uint64_t modulus);

  int f_;
  std::uint64_t modulus_;
  Bits trace_mask_ = 0;          // bit i set iff Tr(u^i) = 1
  std::vector<Bits> sqrt_cols_;  // sqrt(u^i); sqrt is F_2-linear
  std::vector<std::uint32_t> log_;
  std::vector<Bits> exp_;        // doubled length, avoids a modulo in mul
};

// Irreducibility over F_2 of a polynomial given by its coefficient bits.
// Degrees up to 16 are checked by exhaustive trial division.
bool is_irreducible(std::uint64_t poly);

class GF2eElem {
 public:
  GF2eElem(FieldPtr field, std::uint64_t bits);

  static GF2eElem zero(FieldPtr field) { return {std::move(field), 0}; }
  static GF2eElem one(FieldPtr field) { return {std::move(field), 1}; }
  // The root u of the modulus (equal to 1 when f = 1).
  static GF2eElem generator(FieldPtr field);

  Bits bits() const { return bits_; }
  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return bits_ == 0; }

  GF2eElem inverse() const;
  GF2eElem square() const { return {field_, field_->square(bits_)}; }
  GF2eElem sqrt() const { return {field_, field_->sqrt(bits_)}; }
  GF2eElem pow(std::int64_t e) const { return {field_, field_->pow(bits_, e)}; }
  bool trace() const { return field_->trace(bits_); }

  friend GF2eElem operator+(const GF2eElem& a, const GF2eElem& b);
  friend GF2eElem operator*(const GF2eElem& a, const GF2eElem& b);
  friend bool operator==(const GF2eElem& a, const GF2eElem& b);

 private:
  FieldPtr field_;
  Bits bits_;
};

std::ostream& operator<<(std::ostream& os, const GF2eElem& a);

// An F_2-basis u_1, ..., u_f of F_q, with coordinate extraction.
class TraceBasis {
 public:
  // {1, u, ..., u^{f-1}}: u_1 = 1.
  static TraceBasis power_basis(FieldPtr field);
  // Throws InvalidField if the elements are not a basis.
  static TraceBasis from_elements(FieldPtr field, std::vector<Bits> elements);

  const FieldPtr& field() const { return field_; }
  int size() const { return static_cast<int>(elements_.size()); }
  // 1-based, as u_j.
  Bits element(int j) const { return elements_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<Bits>& elements() const { return elements_; }

  // Bit j-1 of the result is the coefficient of u_j in a.
  Bits coordinates(Bits a) const;
  Bits combine(Bits coordinates) const;

  bool operator==(const TraceBasis& other) const {
    return field_->same_as(*other.field_) && elements_ == other.elements_;
  }

 private:
  TraceBasis(FieldPtr field, std::vector<Bits> elements, std::vector<std::uint64_t> inverse);

  FieldPtr field_;
  std::vector<Bits> elements_;
  std::vector<std::uint64_t> to_coords_;  // columns of the inverse change of basis
};

using BasisPtr = std::shared_ptr<const TraceBasis>;

}  // namespace aschar
