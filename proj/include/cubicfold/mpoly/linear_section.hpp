#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cubicfold/linalg.hpp"
#include "cubicfold/mpoly/parser.hpp"

namespace cubicfold {

/// Common zero locus of independent linear forms, with a parametrizing basis.
struct LinearSection {
  std::size_t ambient = 0;
  std::vector<CycPoly> forms;
  Matrix<Cyclotomic> basis;  // each entry has length ambient

  std::size_t dimension() const { return basis.size(); }

  /// Point of the ambient space with parameters t.
  std::vector<Cyclotomic> point(const std::vector<Cyclotomic>& t) const {
    if (t.size() != basis.size()) throw std::invalid_argument("parameter length must equal section dimension");
    std::vector<Cyclotomic> x(ambient, Cyclotomic(0L));
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t i = 0; i < ambient; ++i)
        if (!is_zero(basis[j][i]) && !is_zero(t[j])) x[i] += basis[j][i] * t[j];
    return x;
  }
};

inline Matrix<Cyclotomic> linear_form_matrix(const std::vector<CycPoly>& forms, std::size_t ambient) {
  Matrix<Cyclotomic> rows;
  for (const auto& f : forms) {
    if (f.nvars() != ambient || !f.is_homogeneous(1) || f.is_zero())
      throw std::invalid_argument("linear section forms must be nonzero linear forms in the ambient variables");
    std::vector<Cyclotomic> row(ambient, Cyclotomic(0L));
    for (std::size_t i = 0; i < ambient; ++i) row[i] = f.coefficient(Monomial::variable(ambient, i));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Builds the section. If kept is given, the basis vector for kept[j] has a 1 in that
/// coordinate, 0 in the other kept coordinates, and the eliminated coordinates solved.
inline LinearSection make_linear_section(const std::vector<CycPoly>& forms, std::size_t ambient,
                                         std::optional<std::vector<std::size_t>> kept = std::nullopt) {
  LinearSection s;
  s.ambient = ambient;
  s.forms = forms;
  Matrix<Cyclotomic> a = linear_form_matrix(forms, ambient);
  if (rank(a) != forms.size()) throw std::invalid_argument("linear section forms are dependent");
  if (!kept) {
    s.basis = kernel(a, ambient);
    return s;
  }
  if (kept->size() + forms.size() != ambient) throw std::invalid_argument("kept coordinates do not match section dimension");
  std::vector<bool> is_kept(ambient, false);
  for (auto k : *kept) is_kept.at(k) = true;
  std::vector<std::size_t> elim;
  for (std::size_t i = 0; i < ambient; ++i)
    if (!is_kept[i]) elim.push_back(i);
  Matrix<Cyclotomic> sub(forms.size(), std::vector<Cyclotomic>(elim.size()));
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (std::size_t c = 0; c < elim.size(); ++c) sub[r][c] = a[r][elim[c]];
  Matrix<Cyclotomic> sub_inv = matrix_inverse(sub);
  for (auto k : *kept) {
    std::vector<Cyclotomic> rhs(forms.size());
    for (std::size_t r = 0; r < forms.size(); ++r) rhs[r] = -a[r][k];
    auto sol = matvec(sub_inv, rhs);
    std::vector<Cyclotomic> v(ambient, Cyclotomic(0L));
    v[k] = Cyclotomic(1L);
    for (std::size_t c = 0; c < elim.size(); ++c) v[elim[c]] = sol[c];
    s.basis.push_back(std::move(v));
  }
  return s;
}

/// F composed with the parametrization, as a polynomial in dimension() fresh variables.
inline CycPoly restrict_to_linear_section(const CycPoly& f, const LinearSection& s) {
  if (f.nvars() != s.ambient) throw std::invalid_argument("polynomial and section ambient dimensions differ");
  if (s.basis.size() + s.forms.size() != s.ambient) throw std::invalid_argument("section basis has wrong length");
  std::size_t d = s.basis.size();
  std::vector<CycPoly> images;
  for (std::size_t i = 0; i < s.ambient; ++i) {
    CycPoly l(d);
    for (std::size_t j = 0; j < d; ++j) l.add_term(Monomial::variable(d, j), s.basis[j][i]);
    images.push_back(std::move(l));
  }
  return substitute(f, images, d);
}

}  // namespace cubicfold
