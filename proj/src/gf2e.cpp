#include "aschar/gf2e.hpp"

#include <string>

#include "aschar/gf2_linalg.hpp"

namespace aschar {
namespace {

int poly_degree(std::uint64_t p) { return gf2::highest_bit(p); }

// Carry-less product; the caller keeps the degrees small enough for 64 bits.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return poly_mod(clmul(a, b), m);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(std::uint64_t poly) {
  const int d = poly_degree(poly);
  if (d <= 0) return false;
  if (d == 1) return true;
  if (d > Field::kMaxDegree) return false;
  if (d <= 16) {
    for (std::uint64_t g = 2; g < (std::uint64_t{1} << (d / 2 + 1)); ++g) {
      if (poly_mod(poly, g) == 0) return false;
    }
    return true;
  }
  // Rabin's test.
  auto frobenius_power = [&](int k) {
    std::uint64_t x = 2;
    for (int i = 0; i < k; ++i) x = mulmod(x, x, poly);
    return x;
  };
  if (frobenius_power(d) != 2) return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(d))) {
    const std::uint64_t h = frobenius_power(d / static_cast<int>(r)) ^ 2;
    if (poly_gcd(poly, h) != 1) return false;
  }
  return true;
}

std::optional<std::uint64_t> Field::default_modulus(int f) {
  switch (f) {
    case 1: return 0b11;
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    default: return std::nullopt;
  }
}

FieldPtr Field::make(int f, std::optional<std::uint64_t> modulus_bits) {
  if (f < 1 || f > kMaxDegree) {
    throw InvalidField("extension degree f must lie in [1, " + std::to_string(kMaxDegree) +
                       "], got " + std::to_string(f));
  }
  if (!modulus_bits) modulus_bits = default_modulus(f);
  if (!modulus_bits) {
    throw InvalidField("f = " + std::to_string(f) + " requires an explicit modulus");
  }
  if (poly_degree(*modulus_bits) != f) {
    throw InvalidField("modulus " + std::to_string(*modulus_bits) + " does not have degree " +
                       std::to_string(f));
  }
  if (!is_irreducible(*modulus_bits)) {
    throw InvalidField("modulus " + std::to_string(*modulus_bits) + " is reducible over F_2");
  }
  return FieldPtr(new Field(f, *modulus_bits));
}

Field::Field(int f, std::uint64_t modulus) : f_(f), modulus_(modulus) {
  if (f_ <= kTableDegree) {
    const std::uint64_t q1 = order() - 1;
    Bits gen = 1;
    if (q1 > 1) {
      const auto factors = prime_factors(q1);
      for (Bits g = 2; g < order(); ++g) {
        bool primitive = true;
        for (std::uint64_t p : factors) {
          Bits x = 1;
          for (std::uint64_t e = q1 / p, b = g; e != 0; e >>= 1) {
            if (e & 1) x = mul_plain(x, static_cast<Bits>(b));
            b = mul_plain(static_cast<Bits>(b), static_cast<Bits>(b));
          }
          if (x == 1) {
            primitive = false;
            break;
          }
        }
        if (primitive) {
          gen = g;
          break;
        }
      }
    }
    log_.assign(order(), 0);
    exp_.assign(2 * q1, 0);
    Bits x = 1;
    for (std::uint64_t i = 0; i < q1; ++i) {
      exp_[i] = exp_[i + q1] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_plain(x, gen);
    }
  }

  sqrt_cols_.resize(f_);
  for (int i = 0; i < f_; ++i) {
    Bits x = Bits{1} << i;
    for (int k = 0; k + 1 < f_; ++k) x = mul_plain(x, x);
    sqrt_cols_[i] = x;

    Bits sum = 0, y = Bits{1} << i;
    for (int k = 0; k < f_; ++k) {
      sum ^= y;
      y = mul_plain(y, y);
    }
    if (sum == 1) trace_mask_ |= Bits{1} << i;
  }
}

Bits Field::mul_plain(Bits a, Bits b) const {
  return static_cast<Bits>(mulmod(a, b, modulus_));
}

Bits Field::mul(Bits a, Bits b) const {
  if (!exp_.empty()) {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  return mul_plain(a, b);
}

Bits Field::inv(Bits a) const {
  if (a == 0) throw DivisionByZero();
  if (!exp_.empty()) {
    const std::uint64_t q1 = order() - 1;
    return exp_[(q1 - log_[a]) % q1];
  }
  return pow(a, static_cast<std::int64_t>(order() - 2));
}

Bits Field::pow(Bits a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  if (a == 0) return e == 0 ? 1 : 0;
  e %= static_cast<std::int64_t>(order() - 1);
  Bits r = 1;
  for (; e != 0; e >>= 1) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
  }
  return r;
}

Bits Field::sqrt(Bits a) const {
  Bits r = 0;
  for (int i = 0; a != 0; ++i, a >>= 1) {
    if (a & 1) r ^= sqrt_cols_[i];
  }
  return r;
}

GF2eElem::GF2eElem(FieldPtr field, std::uint64_t bits) : field_(std::move(field)) {
  if (!field_->contains(bits)) {
    throw InvalidField("bitmask " + std::to_string(bits) + " is not an element of F_" +
                       std::to_string(field_->order()));
  }
  bits_ = static_cast<Bits>(bits);
}

GF2eElem GF2eElem::generator(FieldPtr field) {
  const Bits u = field->degree() == 1 ? 1 : 2;
  return {std::move(field), u};
}

GF2eElem GF2eElem::inverse() const { return {field_, field_->inv(bits_)}; }

GF2eElem operator+(const GF2eElem& a, const GF2eElem& b) {
  if (!a.field_->same_as(*b.field_)) throw FieldMismatch();
  return {a.field_, a.bits_ ^ b.bits_};
}

GF2eElem operator*(const GF2eElem& a, const GF2eElem& b) {
  if (!a.field_->same_as(*b.field_)) throw FieldMismatch();
  return {a.field_, a.field_->mul(a.bits_, b.bits_)};
}

bool operator==(const GF2eElem& a, const GF2eElem& b) {
  return a.field_->same_as(*b.field_) && a.bits_ == b.bits_;
}

std::ostream& operator<<(std::ostream& os, const GF2eElem& a) { return os << a.bits(); }

TraceBasis::TraceBasis(FieldPtr field, std::vector<Bits> elements,
                       std::vector<std::uint64_t> inverse)
    : field_(std::move(field)), elements_(std::move(elements)), to_coords_(std::move(inverse)) {}

TraceBasis TraceBasis::power_basis(FieldPtr field) {
  std::vector<Bits> elems;
  std::vector<std::uint64_t> identity;
  for (int i = 0; i < field->degree(); ++i) {
    elems.push_back(Bits{1} << i);
    identity.push_back(std::uint64_t{1} << i);
  }
  return TraceBasis(std::move(field), std::move(elems), std::move(identity));
}

TraceBasis TraceBasis::from_elements(FieldPtr field, std::vector<Bits> elements) {
  const int f = field->degree();
  if (static_cast<int>(elements.size()) != f) {
    throw InvalidField("a basis of F_q over F_2 needs exactly f = " + std::to_string(f) +
                       " elements");
  }
  std::vector<std::uint64_t> cols(elements.begin(), elements.end());
  for (auto c : cols) {
    if (!field->contains(c)) throw InvalidField("basis element outside the field");
  }
  auto inv = gf2::inverse_columns(cols, f);
  if (!inv) throw InvalidField("basis elements are F_2-linearly dependent");
  return TraceBasis(std::move(field), std::move(elements), std::move(*inv));
}

Bits TraceBasis::coordinates(Bits a) const {
  return static_cast<Bits>(gf2::apply_columns(to_coords_, a));
}

Bits TraceBasis::combine(Bits coordinates) const {
  Bits r = 0;
  for (std::size_t j = 0; j < elements_.size() && coordinates != 0; ++j, coordinates >>= 1) {
    if (coordinates & 1) r ^= elements_[j];
  }
  return r;
}

}  // namespace aschar
