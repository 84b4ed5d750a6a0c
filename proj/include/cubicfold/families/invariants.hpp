#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "cubicfold/autgrp/automorphism.hpp"
#include "cubicfold/autgrp/symmetries.hpp"

namespace cubicfold {

/// lambda-eigenspace of F -> F(M x) on cubic forms. For diagonal M the basis consists of
/// monomials (also listed in `monomials`).
struct InvariantSpace {
  std::vector<Monomial> monomials;
  std::vector<CycPoly> basis;
  std::size_t dimension() const { return basis.size(); }
};

inline InvariantSpace invariant_cubic_space(const ProjectiveAutomorphism& m, const Cyclotomic& lambda, int degree = 3) {
  std::size_t nv = m.size();
  auto all = monomials_of_degree(nv, degree);
  InvariantSpace out;
  if (m.is_diagonal()) {
    const auto& t = *m.tag();
    auto c = detail::nth_root_exponent(lambda, t.n);
    if (!c) return out;
    for (const auto& mono : all)
      if (arith::mod_floor(mono.weight(t.weights) - *c, t.n) == 0) {
        out.monomials.push_back(mono);
        out.basis.push_back(CycPoly::monomial(mono));
      }
    return out;
  }
  // matrix of the induced action in the monomial basis, minus lambda
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < all.size(); ++k) index[all[k].exponents] = k;
  std::size_t d = all.size();
  Matrix<Cyclotomic> a(d, std::vector<Cyclotomic>(d, Cyclotomic(0L)));
  for (std::size_t col = 0; col < d; ++col) {
    CycPoly image = apply(CycPoly::monomial(all[col]), m);
    for (const auto& [mono, c] : image.terms()) a[index.at(mono.exponents)][col] = c;
    a[col][col] -= lambda;
  }
  for (auto& v : kernel(a, d)) {
    CycPoly p(nv);
    for (std::size_t k = 0; k < d; ++k) p.add_term(all[k], v[k]);
    out.basis.push_back(std::move(p));
  }
  return out;
}

/// Sum of squared eigenvalue multiplicities minus one, computed as dim{X : XM = MX} - 1.
inline long centralizer_dimension(const ProjectiveAutomorphism& m) {
  std::size_t n = m.size();
  if (m.is_diagonal()) {
    std::map<long, long> mult;
    for (auto w : m.tag()->weights) ++mult[w];
    long s = 0;
    for (auto [w, k] : mult) s += k * k;
    return s - 1;
  }
  Matrix<Cyclotomic> mat = m.matrix();
  // unknown X[i][j] at index i*n+j; equation (XM - MX)[r][c] = 0
  Matrix<Cyclotomic> eq(n * n, std::vector<Cyclotomic>(n * n, Cyclotomic(0L)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      auto& row = eq[r * n + c];
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(mat[k][c])) row[r * n + k] += mat[k][c];
        if (!is_zero(mat[r][k])) row[k * n + c] -= mat[r][k];
      }
    }
  return static_cast<long>(n * n - rank(eq)) - 1;
}

/// Moduli count of the family: (dim of the eigenspace - 1) - centralizer dimension.
inline long family_dimension(const ProjectiveAutomorphism& m, const Cyclotomic& lambda) {
  auto space = invariant_cubic_space(m, lambda);
  if (space.dimension() == 0) throw std::invalid_argument("lambda is not an eigenvalue on cubic forms");
  return static_cast<long>(space.dimension()) - 1 - centralizer_dimension(m);
}

}  // namespace cubicfold
