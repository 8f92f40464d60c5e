#pragma once

// The Artin–Schreier symbol (α, β] : K^× × K/℘(K) -> F_2 for K = F_q((t)),
// canonical representatives of K/℘(K), and the quadratic characters
// χ_{n,j} = (·, u_j t^{-2n-1}].
//
// Symbol values are F_2 bits (false = 0, true = 1). Multiplicative notation
// (+1/-1) is a presentation concern only.

#include <set>
#include <utility>

#include "aschar/gf2_linalg.hpp"
#include "aschar/laurent.hpp"

namespace aschar {

// The distinguished unramified representative β_0: the first of 1, u, u^2, ...
// with trace 1 (this is 1 itself when f is odd).
Bits unramified_representative(const Field& field);

// A class in K/℘(K), written c·β_0 + Σ ε_{n,j} u_j t^{-(2n+1)}.
class CosetRep {
 public:
  using Generator = std::pair<int, int>;  // (n >= 0, 1 <= j <= f)

  explicit CosetRep(BasisPtr basis);
  static CosetRep generator(BasisPtr basis, int n, int j);
  static CosetRep unramified(BasisPtr basis);

  const BasisPtr& basis() const { return basis_; }
  const FieldPtr& field() const { return basis_->field(); }
  bool unram_bit() const { return unram_; }
  const std::set<Generator>& wild() const { return wild_; }
  bool is_zero() const { return !unram_ && wild_.empty(); }
  // Largest n among wild generators, -1 if there are none.
  int max_n() const { return wild_.empty() ? -1 : wild_.rbegin()->first; }

  void toggle_unramified() { unram_ = !unram_; }
  void toggle(int n, int j);

  // c·β_0 + Σ u_j t^{-(2n+1)} + O(t^prec); prec >= 1.
  LaurentSeries to_series(int prec = 1) const;

  // Coordinates in V_t: bit 0 is c, bit 1 + n f + (j-1) is ε_{n,j}.
  gf2::Vec coordinates() const;
  static CosetRep from_coordinates(BasisPtr basis, gf2::Vec v);

  friend CosetRep operator+(const CosetRep& a, const CosetRep& b);
  friend bool operator==(const CosetRep& a, const CosetRep& b);
  friend bool operator<(const CosetRep& a, const CosetRep& b) {
    return a.coordinates() < b.coordinates();
  }

 private:
  BasisPtr basis_;
  bool unram_ = false;
  std::set<Generator> wild_;
};

// Index of ε_{n,j} in CosetRep::coordinates().
inline int coset_coordinate(int n, int j, int f) { return 1 + n * f + (j - 1); }

// A nonzero class viewed as the quadratic character χ_β = (·, β].
class QuadChar {
 public:
  explicit QuadChar(CosetRep rep);  // ZeroCharacter for the zero class
  static QuadChar chi(BasisPtr basis, int n, int j) {
    return QuadChar(CosetRep::generator(std::move(basis), n, j));
  }
  const CosetRep& rep() const { return rep_; }

 private:
  CosetRep rep_;
};

// ℘(g) = g^2 - g = g^2 + g.
LaurentSeries wp(const LaurentSeries& g);

// d(α, β) = Tr res(β α^{-1} dα/dt). For β with a pole of order 2n+1 this
// needs α known to relative precision 2n+2.
bool pairing(const LaurentSeries& alpha, const LaurentSeries& beta);
bool pairing(const LaurentSeries& alpha, const CosetRep& beta);

// Closed form for χ_{n,j}: Σ_{i | 2n+1} Tr(u_j θ_i^{(2n+1)/i}) over the
// product expansion of α.
bool generator_eval(const ProductExpansion& alpha, const TraceBasis& basis, int n, int j);
// Sums generator_eval over the wild part and adds c·(v(α) mod 2).
bool char_eval(const CosetRep& rep, const LaurentSeries& alpha);
inline bool char_eval(const QuadChar& chi, const LaurentSeries& alpha) {
  return char_eval(chi.rep(), alpha);
}

// Unique canonical representative of β + ℘(K). Needs prec(β) >= 1.
CosetRep reduce_coset(const LaurentSeries& beta, BasisPtr basis);

// 2n+1 for χ_{n,j}; max over wild generators in general; -1 for the
// unramified character.
int char_level(const QuadChar& chi);

// dim_{F_2} V_n = 1 + ceil(n/2) f.
int coset_space_dim(int n, int f);

}  // namespace aschar
