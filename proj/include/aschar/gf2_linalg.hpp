#pragma once

// Dense linear algebra over F_2 on vectors packed into 64-bit words
// (bit i is coordinate i). Ambient dimensions are at most 64.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace aschar::gf2 {

using Vec = std::uint64_t;

inline int highest_bit(Vec v) { return v == 0 ? -1 : 63 - __builtin_clzll(v); }

inline bool parity(Vec v) { return __builtin_parityll(v) != 0; }

// Rank of the span of `vectors`.
int rank(std::span<const Vec> vectors);

// Reduced row echelon form of the span: one row per pivot, pivots are the
// highest set bits, every pivot column is zero in all other rows, rows are
// sorted by decreasing pivot. Two families span the same subspace iff their
// echelon forms are equal.
std::vector<Vec> echelon(std::span<const Vec> vectors);

// Inverse of the n x n matrix whose columns are `columns` (column j is the
// image of basis vector e_j), again given by columns. nullopt if singular.
std::optional<std::vector<Vec>> inverse_columns(std::span<const Vec> columns, int n);

// Applies a matrix given by columns to a vector.
inline Vec apply_columns(std::span<const Vec> columns, Vec v) {
  Vec out = 0;
  for (std::size_t j = 0; j < columns.size() && v != 0; ++j, v >>= 1) {
    if (v & 1) out ^= columns[j];
  }
  return out;
}

}  // namespace aschar::gf2
