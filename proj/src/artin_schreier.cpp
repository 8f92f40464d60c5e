#include "aschar/artin_schreier.hpp"

#include <map>
#include <string>

namespace aschar {

Bits unramified_representative(const Field& field) {
  const Bits u = field.degree() == 1 ? 1 : 2;
  Bits x = 1;
  for (int i = 0; i < field.degree(); ++i, x = field.mul(x, u)) {
    if (field.trace(x)) return x;
  }
  // The powers of u span F_q and the trace is a nonzero functional.
  throw std::logic_error("no power of u has trace 1");
}

CosetRep::CosetRep(BasisPtr basis) : basis_(std::move(basis)) {}

CosetRep CosetRep::generator(BasisPtr basis, int n, int j) {
  CosetRep r(std::move(basis));
  r.toggle(n, j);
  return r;
}

CosetRep CosetRep::unramified(BasisPtr basis) {
  CosetRep r(std::move(basis));
  r.unram_ = true;
  return r;
}

void CosetRep::toggle(int n, int j) {
  if (n < 0 || j < 1 || j > basis_->size()) {
    throw PreconditionViolated("no generator (n=" + std::to_string(n) + ", j=" + std::to_string(j) +
                               ") for f = " + std::to_string(basis_->size()));
  }
  const Generator g{n, j};
  if (!wild_.erase(g)) wild_.insert(g);
}

LaurentSeries CosetRep::to_series(int prec) const {
  if (prec < 1) throw InsufficientPrecision("coset representatives need prec >= 1");
  std::map<int, Bits> terms;
  if (unram_) terms[0] = unramified_representative(*field());
  for (const auto& [n, j] : wild_) terms[-(2 * n + 1)] ^= basis_->element(j);
  return LaurentSeries::from_terms(field(), terms, prec);
}

gf2::Vec CosetRep::coordinates() const {
  const int f = basis_->size();
  gf2::Vec v = unram_ ? 1 : 0;
  for (const auto& [n, j] : wild_) {
    const int idx = coset_coordinate(n, j, f);
    if (idx >= 64) throw InfeasibleEnumeration("coset coordinates exceed 64 bits");
    v |= gf2::Vec{1} << idx;
  }
  return v;
}

CosetRep CosetRep::from_coordinates(BasisPtr basis, gf2::Vec v) {
  CosetRep r(std::move(basis));
  const int f = r.basis_->size();
  r.unram_ = (v & 1) != 0;
  for (int idx = 1; idx < 64; ++idx) {
    if ((v >> idx) & 1) r.wild_.insert({(idx - 1) / f, (idx - 1) % f + 1});
  }
  return r;
}

CosetRep operator+(const CosetRep& a, const CosetRep& b) {
  if (!(*a.basis_ == *b.basis_)) throw FieldMismatch();
  CosetRep r = a;
  r.unram_ = a.unram_ != b.unram_;
  for (const auto& [n, j] : b.wild_) r.toggle(n, j);
  return r;
}

bool operator==(const CosetRep& a, const CosetRep& b) {
  return *a.basis_ == *b.basis_ && a.unram_ == b.unram_ && a.wild_ == b.wild_;
}

QuadChar::QuadChar(CosetRep rep) : rep_(std::move(rep)) {
  if (rep_.is_zero()) throw ZeroCharacter();
}

LaurentSeries wp(const LaurentSeries& g) { return g.square() + g; }

bool pairing(const LaurentSeries& alpha, const LaurentSeries& beta) {
  const LaurentSeries dlog = invert(alpha) * derivative(alpha);
  return residue(beta * dlog).trace();
}

bool pairing(const LaurentSeries& alpha, const CosetRep& beta) {
  return pairing(alpha, beta.to_series(1));
}

bool generator_eval(const ProductExpansion& alpha, const TraceBasis& basis, int n, int j) {
  const int m = 2 * n + 1;
  if (alpha.determined_through() < m) {
    throw InsufficientPrecision("χ_{" + std::to_string(n) + "," + std::to_string(j) +
                                "} needs θ_i through i = " + std::to_string(m));
  }
  const Field& F = *alpha.field;
  const Bits u = basis.element(j);
  bool sum = false;
  for (int i = 1; i <= m; i += 2) {
    if (m % i != 0) continue;
    sum ^= F.trace(F.mul(u, F.pow(alpha.theta(i), m / i)));
  }
  return sum;
}

bool char_eval(const CosetRep& rep, const LaurentSeries& alpha) {
  const ProductExpansion e = product_expansion(alpha);
  bool sum = rep.unram_bit() && (e.k % 2 != 0);
  for (const auto& [n, j] : rep.wild()) sum ^= generator_eval(e, *rep.basis(), n, j);
  return sum;
}

CosetRep reduce_coset(const LaurentSeries& beta, BasisPtr basis) {
  if (beta.prec() < 1) {
    throw InsufficientPrecision("reduction needs the constant term: prec must be >= 1, got " +
                                std::to_string(beta.prec()));
  }
  if (!beta.field()->same_as(*basis->field())) throw FieldMismatch();
  const Field& F = *beta.field();

  // Only the principal part and the constant term matter: ℘ is bijective on t F_q[[t]].
  std::map<int, Bits> pole;  // m -> coefficient of t^{-m}, m >= 0
  for (const auto& [e, c] : beta.terms()) {
    if (e <= 0) pole[-e] = c;
  }
  CosetRep rep(basis);
  while (!pole.empty()) {
    auto it = std::prev(pole.end());
    const auto [m, c] = *it;
    pole.erase(it);
    if (c == 0) continue;
    if (m == 0) {
      if (F.trace(c)) rep.toggle_unramified();
    } else if (m % 2 == 0) {
      // θ t^{-2k} = ℘(θ^{1/2} t^{-k}) + θ^{1/2} t^{-k}.
      pole[m / 2] ^= F.sqrt(c);
    } else {
      const Bits coords = basis->coordinates(c);
      for (int j = 1; j <= basis->size(); ++j) {
        if ((coords >> (j - 1)) & 1) rep.toggle((m - 1) / 2, j);
      }
    }
  }
  return rep;
}

int char_level(const QuadChar& chi) {
  const int n = chi.rep().max_n();
  return n < 0 ? -1 : 2 * n + 1;
}

int coset_space_dim(int n, int f) {
  if (n < 0) throw PreconditionViolated("coset_space_dim needs n >= 0");
  return 1 + (n + 1) / 2 * f;
}

}  // namespace aschar
