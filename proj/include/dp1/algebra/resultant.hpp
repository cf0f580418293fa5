#pragma once

#include "dp1/algebra/bipoly.hpp"

#include <cstdint>
#include <stdexcept>
#include <map>
#include <vector>

namespace dp1::algebra {

namespace detail {

/// Division-free determinant by cofactor expansion along rows, memoized on
/// the set of columns already used. Works over any commutative ring.
template <class R>
R det_cofactor(const std::vector<std::vector<R>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  if (n > 24) throw std::length_error("determinant too large for cofactor expansion");
  std::map<std::uint32_t, R> memo;
  // minor(row, used): determinant of rows row..n-1 against the unused columns
  auto minor = [&](auto&& self, std::size_t row, std::uint32_t used) -> R {
    if (row == n) return R(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    R acc{};
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (used & (1U << col)) continue;
      const R& entry = m[row][col];
      if (!is_zero_value(entry)) {
        R term = entry * self(self, row + 1, used | (1U << col));
        if (sign > 0) acc += term; else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(minor, 0, 0);
}

}  // namespace detail

/// Sylvester matrix of two univariate polynomials over a ring.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Poly<R>& p, const Poly<R>& q) {
  const int m = p.degree();
  const int n = q.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<R>> s(size, std::vector<R>(size));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = p.coeff(m - k);
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = q.coeff(n - k);
  }
  return s;
}

/// Resultant of univariate polynomials over a commutative ring.
template <class R>
R resultant(const Poly<R>& p, const Poly<R>& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
  return detail::det_cofactor(sylvester_matrix(p, q));
}

/// Resultant with respect to `eliminate`, returned as a polynomial in the other variable.
template <class F>
Poly<F> resultant(const BiPoly<F>& p, const BiPoly<F>& q, Var eliminate) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
  if (p.degree(eliminate) <= 0 && q.degree(eliminate) <= 0) {
    throw std::invalid_argument("resultant: eliminated variable occurs in neither polynomial");
  }
  return resultant(p.as_poly_in(eliminate), q.as_poly_in(eliminate));
}

}  // namespace dp1::algebra
