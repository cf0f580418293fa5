#pragma once

#include "dp1/algebra/poly.hpp"

#include <cstddef>
#include <vector>

namespace dp1::algebra {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
struct RowEchelon {
  Matrix<F> rows;                 // reduced rows, one per pivot, pivot entries equal to 1
  std::vector<std::size_t> pivots;
};

/// Exact Gauss-Jordan elimination to reduced row echelon form.
template <class F>
RowEchelon<F> rref(Matrix<F> m, std::size_t ncols) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && is_zero_value(m[p][col])) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const F inv = F(1) / m[r][col];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == r || is_zero_value(m[k][col])) continue;
      const F f = m[k][col];
      for (std::size_t j = col; j < ncols; ++j) {
        if (!is_zero_value(m[r][j])) m[k][j] -= f * m[r][j];
      }
    }
    pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  return {std::move(m), std::move(pivots)};
}

/// Basis of the right kernel, one vector per free column (free entry 1).
template <class F>
Matrix<F> nullspace(const Matrix<F>& m, std::size_t ncols) {
  const auto e = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix<F> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(ncols);
    v[f] = F(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dp1::algebra
