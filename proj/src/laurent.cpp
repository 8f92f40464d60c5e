#include "aschar/laurent.hpp"

#include <algorithm>
#include <string>

namespace aschar {
namespace {

void require_same_field(const LaurentSeries& a, const LaurentSeries& b) {
  if (!a.field()->same_as(*b.field())) throw FieldMismatch();
}

}  // namespace

LaurentSeries::LaurentSeries(FieldPtr field, int start, std::vector<Bits> coeffs, int prec)
    : field_(std::move(field)), prec_(prec) {
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
  if (lead == coeffs.size()) return;
  val_ = start + static_cast<int>(lead);
  zero_ = false;
  coeffs_.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(lead), coeffs.end());
}

LaurentSeries LaurentSeries::zero(FieldPtr field, int prec) {
  return LaurentSeries(std::move(field), prec, {}, prec);
}

LaurentSeries LaurentSeries::monomial(FieldPtr field, Bits coeff, int exponent, int prec) {
  return from_terms(std::move(field), {{exponent, coeff}}, prec);
}

LaurentSeries LaurentSeries::from_terms(FieldPtr field, const std::map<int, Bits>& terms,
                                        int prec) {
  if (terms.empty()) return zero(std::move(field), prec);
  const int start = terms.begin()->first;
  if (terms.rbegin()->first >= prec) {
    throw InsufficientPrecision("term t^" + std::to_string(terms.rbegin()->first) +
                                " lies beyond the precision O(t^" + std::to_string(prec) + ")");
  }
  std::vector<Bits> coeffs(static_cast<std::size_t>(prec - start), 0);
  for (const auto& [e, c] : terms) {
    if (!field->contains(c)) throw InvalidField("coefficient outside the field");
    coeffs[static_cast<std::size_t>(e - start)] ^= c;
  }
  return LaurentSeries(std::move(field), start, std::move(coeffs), prec);
}

Bits LaurentSeries::coeff(int exponent) const {
  if (exponent >= prec_) {
    throw InsufficientPrecision("coefficient of t^" + std::to_string(exponent) +
                                " is not determined modulo O(t^" + std::to_string(prec_) + ")");
  }
  if (zero_ || exponent < val_) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - val_)];
}

std::map<int, Bits> LaurentSeries::terms() const {
  std::map<int, Bits> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out[val_ + static_cast<int>(i)] = coeffs_[i];
  }
  return out;
}

LaurentSeries LaurentSeries::truncated(int new_prec) const {
  if (new_prec > prec_) {
    throw InsufficientPrecision("cannot raise precision from " + std::to_string(prec_) + " to " +
                                std::to_string(new_prec));
  }
  if (zero_ || new_prec <= val_) return zero(field_, new_prec);
  std::vector<Bits> c(coeffs_.begin(), coeffs_.begin() + (new_prec - val_));
  return LaurentSeries(field_, val_, std::move(c), new_prec);
}

LaurentSeries LaurentSeries::rescaled(Bits c) const {
  if (c == 0) throw DivisionByZero();
  if (zero_) return *this;
  std::vector<Bits> out(coeffs_.size());
  Bits scale = field_->pow(c, val_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = field_->mul(coeffs_[i], scale);
    scale = field_->mul(scale, c);
  }
  return LaurentSeries(field_, val_, std::move(out), prec_);
}

LaurentSeries LaurentSeries::square() const {
  if (zero_) return zero(field_, 2 * prec_);
  const int new_prec = 2 * prec_;
  std::vector<Bits> out(static_cast<std::size_t>(new_prec - 2 * val_), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = field_->square(coeffs_[i]);
  return LaurentSeries(field_, 2 * val_, std::move(out), new_prec);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(a, b);
  const int prec = std::min(a.prec_, b.prec_);
  const int start = std::min(a.valuation(), b.valuation());
  if (start >= prec) return LaurentSeries::zero(a.field_, prec);
  std::vector<Bits> out(static_cast<std::size_t>(prec - start), 0);
  for (const LaurentSeries* s : {&a, &b}) {
    if (s->zero_) continue;
    for (int e = s->val_; e < prec; ++e) {
      out[static_cast<std::size_t>(e - start)] ^= s->coeffs_[static_cast<std::size_t>(e - s->val_)];
    }
  }
  return LaurentSeries(a.field_, start, std::move(out), prec);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(a, b);
  const int prec = std::min(a.prec_ + b.valuation(), b.prec_ + a.valuation());
  if (a.zero_ || b.zero_) return LaurentSeries::zero(a.field_, prec);
  const Field& F = *a.field_;
  const int start = a.val_ + b.val_;
  const std::size_t len = static_cast<std::size_t>(prec - start);
  std::vector<Bits> out(len, 0);
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
      out[i + j] ^= F.mul(a.coeffs_[i], b.coeffs_[j]);
    }
  }
  return LaurentSeries(a.field_, start, std::move(out), prec);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.field_->same_as(*b.field_) && a.prec_ == b.prec_ && a.zero_ == b.zero_ &&
         (a.zero_ || (a.val_ == b.val_ && a.coeffs_ == b.coeffs_));
}

LaurentSeries invert(const LaurentSeries& a) {
  if (a.is_zero()) throw ZeroInversion();
  const Field& F = *a.field();
  const int v = a.valuation();
  const int r = a.relative_prec();
  std::vector<Bits> c(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = a.coeff(v + i);
  const Bits c0_inv = F.inv(c[0]);

  // b_m = c_0^{-1} Σ_{i=1}^{m} c_i b_{m-i}; signs vanish in characteristic 2.
  std::vector<Bits> b(static_cast<std::size_t>(r), 0);
  b[0] = c0_inv;
  for (int m = 1; m < r; ++m) {
    Bits s = 0;
    for (int i = 1; i <= m; ++i) s ^= F.mul(c[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(m - i)]);
    b[static_cast<std::size_t>(m)] = F.mul(c0_inv, s);
  }
  std::map<int, Bits> terms;
  for (int m = 0; m < r; ++m) {
    if (b[static_cast<std::size_t>(m)] != 0) terms[-v + m] = b[static_cast<std::size_t>(m)];
  }
  return LaurentSeries::from_terms(a.field(), terms, -v + r);
}

LaurentSeries derivative(const LaurentSeries& a) {
  std::map<int, Bits> terms;
  for (const auto& [e, c] : a.terms()) {
    if (e % 2 != 0) terms[e - 1] = c;
  }
  return LaurentSeries::from_terms(a.field(), terms, a.prec() - 1);
}

GF2eElem residue(const LaurentSeries& a) { return a.coefficient(-1); }

Bits ProductExpansion::theta(int i) const {
  if (i == 0) return theta0;
  if (i < 0 || i >= prec - k) {
    throw InsufficientPrecision("θ_" + std::to_string(i) + " is not determined (relative precision " +
                                std::to_string(prec - k) + ")");
  }
  return thetas[static_cast<std::size_t>(i - 1)];
}

ProductExpansion product_expansion(const LaurentSeries& a) {
  if (a.is_zero()) throw ZeroInversion();
  const Field& F = *a.field();
  ProductExpansion e;
  e.field = a.field();
  e.k = a.valuation();
  e.prec = a.prec();
  e.theta0 = a.leading_coeff();
  const int r = a.relative_prec();

  // Normalized unit u = a / (θ_0 t^k), relative coefficients.
  const Bits lead_inv = F.inv(e.theta0);
  std::vector<Bits> u(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) u[static_cast<std::size_t>(i)] = F.mul(a.coeff(e.k + i), lead_inv);

  for (int i = 1; i < r; ++i) {
    const Bits th = u[static_cast<std::size_t>(i)];
    e.thetas.push_back(th);
    if (th == 0) continue;
    // u <- u / (1 + θ t^i): w_m = u_m + θ w_{m-i}, increasing m.
    for (int m = i; m < r; ++m) {
      u[static_cast<std::size_t>(m)] ^= F.mul(th, u[static_cast<std::size_t>(m - i)]);
    }
  }
  return e;
}

LaurentSeries from_product(const ProductExpansion& e) {
  const Field& F = *e.field;
  if (e.theta0 == 0) throw ZeroInversion();
  const int r = e.prec - e.k;
  if (r <= 0) return LaurentSeries::zero(e.field, e.prec);
  std::vector<Bits> w(static_cast<std::size_t>(r), 0);
  w[0] = e.theta0;
  for (std::size_t idx = 0; idx < e.thetas.size(); ++idx) {
    const int i = static_cast<int>(idx) + 1;
    const Bits th = e.thetas[idx];
    if (th == 0 || i >= r) continue;
    // w <- w (1 + θ t^i), decreasing m so each w_{m-i} is still the old value.
    for (int m = r - 1; m >= i; --m) {
      w[static_cast<std::size_t>(m)] ^= F.mul(th, w[static_cast<std::size_t>(m - i)]);
    }
  }
  std::map<int, Bits> terms;
  for (int m = 0; m < r; ++m) {
    if (w[static_cast<std::size_t>(m)] != 0) terms[e.k + m] = w[static_cast<std::size_t>(m)];
  }
  return LaurentSeries::from_terms(e.field, terms, e.prec);
}

}  // namespace aschar
