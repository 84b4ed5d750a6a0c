#pragma once

// Dense linear algebra over an exact field. The element type needs +, -, *,
// construction from long, and free functions is_zero() and inverse().

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cubicfold/exactnum.hpp"

namespace cubicfold {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> identity_matrix(std::size_t n) {
  Matrix<T> m(n, std::vector<T>(n, T(0L)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1L);
  return m;
}

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.empty() || a[0].size() != b.size()) throw std::invalid_argument("matrix dimension mismatch");
  std::size_t n = a.size(), k = b.size(), m = b[0].size();
  Matrix<T> c(n, std::vector<T>(m, T(0L)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!is_zero(b[l][j])) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

template <class T>
std::vector<T> matvec(const Matrix<T>& a, const std::vector<T>& v) {
  if (!a.empty() && a[0].size() != v.size()) throw std::invalid_argument("matrix dimension mismatch");
  std::vector<T> out(a.size(), T(0L));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!is_zero(a[i][j]) && !is_zero(v[j])) out[i] += a[i][j] * v[j];
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  if (a.empty()) return {};
  Matrix<T> t(a[0].size(), std::vector<T>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    T inv = inverse(m[r][c]);
    for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      T f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!is_zero(m[r][k])) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the right kernel {x : m x = 0}.
template <class T>
Matrix<T> kernel(Matrix<T> m, std::size_t cols) {
  if (!m.empty() && m[0].size() != cols) throw std::invalid_argument("matrix dimension mismatch");
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<T> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, T(0L));
    v[f] = T(1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
T determinant(Matrix<T> m) {
  std::size_t n = m.size();
  T det(1L);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m[piv][c])) ++piv;
    if (piv == n) return T(0L);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    T inv = inverse(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      T f = m[i][c] * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!is_zero(m[c][k])) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

template <class T>
Matrix<T> matrix_inverse(const Matrix<T>& a) {
  std::size_t n = a.size();
  Matrix<T> aug(n, std::vector<T>(2 * n, T(0L)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = T(1L);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<T> inv(n, std::vector<T>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace cubicfold
