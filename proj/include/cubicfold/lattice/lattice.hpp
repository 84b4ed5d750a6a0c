#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cubicfold/exactnum/rational.hpp"
#include "cubicfold/linalg.hpp"

namespace cubicfold {

/// Integral symmetric bilinear form given by its Gram matrix.
struct IntegerLattice {
  std::vector<std::vector<std::int64_t>> gram;

  explicit IntegerLattice(std::vector<std::vector<std::int64_t>> g) : gram(std::move(g)) {
    for (const auto& row : gram)
      if (row.size() != gram.size()) throw std::invalid_argument("Gram matrix must be square");
    for (std::size_t i = 0; i < gram.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (gram[i][j] != gram[j][i]) throw std::invalid_argument("Gram matrix must be symmetric");
  }

  std::size_t rank() const { return gram.size(); }

  std::int64_t norm(const std::vector<std::int64_t>& v) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * gram[i][j] * v[j];
    return s;
  }
};

struct LatticeInvariants {
  std::size_t rank;
  Integer determinant;
  bool positive_definite;
};

namespace detail {

/// Leading principal minors d_1..d_n by fraction-free (Bareiss) elimination.
inline std::vector<Integer> leading_minors(const IntegerLattice& l) {
  std::size_t n = l.rank();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Integer(static_cast<long>(l.gram[i][j]));
  // without pivoting the k-th pivot is exactly the k-th leading minor; on a zero pivot
  // fall back to rational determinants of the leading blocks
  std::vector<Integer> minors;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      for (std::size_t m = k + 1; m <= n; ++m) {
        Matrix<Rational> block(m, std::vector<Rational>(m));
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) block[i][j] = Rational(static_cast<long>(l.gram[i][j]));
        minors.push_back(Integer(determinant(block)));
      }
      return minors;
    }
    minors.push_back(a[k][k]);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return minors;
}

}  // namespace detail

inline LatticeInvariants lattice_invariants(const IntegerLattice& l) {
  if (l.rank() == 0) return {0, Integer(1), true};
  auto minors = detail::leading_minors(l);
  bool pd = true;
  for (const auto& m : minors) pd = pd && m > 0;
  return {l.rank(), minors.back(), pd};
}

/// Smallest box half-width containing every vector of norm m: |x_i| <= sqrt(m (G^-1)_ii).
inline std::int64_t norm_box_bound(const IntegerLattice& l, std::int64_t m) {
  if (!lattice_invariants(l).positive_definite) throw std::invalid_argument("lattice is not positive definite");
  std::size_t n = l.rank();
  Matrix<Rational> g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = Rational(static_cast<long>(l.gram[i][j]));
  auto inv = matrix_inverse(g);
  std::int64_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer fl = Integer(Rational(static_cast<long>(m)) * inv[i][i]);
    Integer r = sqrt(fl);
    best = std::max<std::int64_t>(best, r.get_si());
  }
  return best + 1;
}

/// All v in [-bound, bound]^n with v^T G v = m. bound = 0 picks norm_box_bound.
inline std::vector<std::vector<std::int64_t>> enumerate_norm_vectors(const IntegerLattice& l, std::int64_t m,
                                                                     std::int64_t bound = 0) {
  if (!lattice_invariants(l).positive_definite) throw std::invalid_argument("lattice is not positive definite");
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  if (bound == 0) bound = norm_box_bound(l, m);
  std::size_t n = l.rank();
  // Q-form: N(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = Rational(static_cast<long>(l.gram[i][j]));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational t = q[i][j] / q[i][i];
      for (std::size_t k = j; k < n; ++k) q[j][k] -= t * q[i][k];
      q[i][j] = t;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) q[j][i] = 0;

  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(n, 0);
  Rational target(static_cast<long>(m));
  // level i fixes x_i given x_{i+1..n-1}; rest = budget left for levels 0..i
  auto rec = [&](auto&& self, std::ptrdiff_t i, const Rational& rest) -> void {
    if (i < 0) {
      if (rest == 0) out.push_back(x);
      return;
    }
    Rational c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c += q[i][j] * Rational(static_cast<long>(x[j]));
    double radius = std::sqrt(std::max(0.0, Rational(rest / q[i][i]).get_d()));
    double centre = -c.get_d();
    auto lo = std::max<std::int64_t>(-bound, static_cast<std::int64_t>(std::floor(centre - radius)) - 1);
    auto hi = std::min<std::int64_t>(bound, static_cast<std::int64_t>(std::ceil(centre + radius)) + 1);
    for (std::int64_t v = lo; v <= hi; ++v) {
      Rational y = Rational(static_cast<long>(v)) + c;
      Rational left = rest - q[i][i] * y * y;
      if (left < 0) continue;
      x[i] = v;
      self(self, i - 1, left);
    }
    x[i] = 0;
  };
  if (m >= 0) rec(rec, static_cast<std::ptrdiff_t>(n) - 1, target);
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank-2 lattice <h^2, v> and its discriminant.
struct DiscriminantLabel {
  std::int64_t d;
  std::int64_t gram[2][2];
};

inline DiscriminantLabel label_discriminant(std::int64_t h_self, std::int64_t v_norm, std::int64_t v_dot_h) {
  std::int64_t det = h_self * v_norm - v_dot_h * v_dot_h;
  if (h_self <= 0 || det <= 0) throw std::invalid_argument("lattice <h^2, v> is not positive definite");
  return {det, {{h_self, v_dot_h}, {v_dot_h, v_norm}}};
}

}  // namespace cubicfold
