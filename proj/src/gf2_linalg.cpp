#include "aschar/gf2_linalg.hpp"

#include <algorithm>

namespace aschar::gf2 {

std::vector<Vec> echelon(std::span<const Vec> vectors) {
  std::vector<Vec> rows;
  for (Vec v : vectors) {
    for (Vec r : rows) {
      if (v & (Vec{1} << highest_bit(r))) v ^= r;
    }
    if (v == 0) continue;
    // Clear the new pivot out of the existing rows.
    const Vec pivot = Vec{1} << highest_bit(v);
    for (Vec& r : rows) {
      if (r & pivot) r ^= v;
    }
    rows.push_back(v);
  }
  // Lower pivots may still appear in the new rows: finish the back substitution.
  std::sort(rows.begin(), rows.end(), std::greater<>());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Vec pivot = Vec{1} << highest_bit(rows[i]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != i && (rows[k] & pivot)) rows[k] ^= rows[i];
    }
  }
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return rows;
}

int rank(std::span<const Vec> vectors) {
  std::vector<Vec> basis;
  for (Vec v : vectors) {
    for (Vec b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      std::sort(basis.begin(), basis.end(), std::greater<>());
    }
  }
  return static_cast<int>(basis.size());
}

std::optional<std::vector<Vec>> inverse_columns(std::span<const Vec> columns, int n) {
  // Row-reduce [A | I] where A's rows are read off the column representation.
  std::vector<Vec> left(n, 0), right(n, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if ((columns[j] >> i) & 1) left[i] |= Vec{1} << j;
    }
  }
  for (int i = 0; i < n; ++i) right[i] = Vec{1} << i;

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if ((left[r] >> col) & 1) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(left[col], left[pivot]);
    std::swap(right[col], right[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r != col && ((left[r] >> col) & 1)) {
        left[r] ^= left[col];
        right[r] ^= right[col];
      }
    }
  }
  // `right` now holds the rows of A^{-1}; convert back to columns.
  std::vector<Vec> inv(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((right[i] >> j) & 1) inv[j] |= Vec{1} << i;
    }
  }
  return inv;
}

}  // namespace aschar::gf2
