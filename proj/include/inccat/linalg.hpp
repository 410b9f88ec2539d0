#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "inccat/rational.hpp"

namespace inccat {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix<Rational>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix<Rational> a) { return row_reduce(a).size(); }

/// Basis of {x : A x = 0} for a rows x cols matrix, one vector per free
/// column, read off the reduced echelon form.
inline std::vector<std::vector<Rational>> kernel_basis(Matrix<Rational> a, std::size_t cols) {
  for (auto& row : a) row.resize(cols);
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// U A V = D with D diagonal (d_1 | d_2 | ..., all >= 0) and U, V unimodular.
/// Only V is kept; it is what membership in the row lattice needs.
struct SmithForm {
  std::vector<Integer> diagonal;  ///< nonzero invariant factors, in order
  Matrix<Integer> column_transform;  ///< V, cols x cols
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t rank() const { return diagonal.size(); }
  std::size_t free_rank() const { return cols - diagonal.size(); }
  std::vector<Integer> torsion() const {
    std::vector<Integer> t;
    for (const auto& d : diagonal)
      if (d > 1) t.push_back(d);
    return t;
  }

  /// Whether the integer row vector x is an integer combination of the rows
  /// of A: x V must have entry i divisible by d_i and vanish past the rank.
  bool in_row_lattice(const std::vector<Integer>& x) const {
    for (std::size_t j = 0; j < cols; ++j) {
      Integer y = 0;
      for (std::size_t i = 0; i < cols; ++i) y += x[i] * column_transform[i][j];
      if (j < diagonal.size()) {
        if (y % diagonal[j] != 0) return false;
      } else if (y != 0) {
        return false;
      }
    }
    return true;
  }
};

inline SmithForm smith_normal_form(Matrix<Integer> a, std::size_t cols) {
  const std::size_t rows = a.size();
  for (auto& row : a) row.resize(cols);
  Matrix<Integer> v(cols, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    for (auto& row : a) std::swap(row[c1], row[c2]);
    for (auto& row : v) std::swap(row[c1], row[c2]);
  };
  // column c2 -= q * column c1
  auto sub_col = [&](std::size_t c2, std::size_t c1, const Integer& q) {
    for (auto& row : a) row[c2] -= q * row[c1];
    for (auto& row : v) row[c2] -= q * row[c1];
  };

  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    // smallest nonzero entry in the remaining block becomes the pivot
    bool any = false;
    std::size_t pr = 0, pc = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!any || abs(a[i][j]) < abs(a[pr][pc]))) {
          any = true;
          pr = i;
          pc = j;
        }
    if (!any) break;
    std::swap(a[t], a[pr]);
    swap_cols(t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          clean = false;
          std::swap(a[t], a[i]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        sub_col(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) {
          clean = false;
          swap_cols(t, j);
        }
      }
      if (!clean) continue;
      // enforce divisibility into the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
    }
  }
  SmithForm s;
  s.rows = rows;
  s.cols = cols;
  s.column_transform = std::move(v);
  for (std::size_t i = 0; i < t; ++i) s.diagonal.push_back(a[i][i]);
  return s;
}

}  // namespace inccat
