#pragma once

#include <stdexcept>
#include <vector>

#include "cubicfold/cert/planes.hpp"

namespace cubicfold {

/// Coefficients of u^2 v and u v^2 in F(uP + vQ), P = a1 p1 + a2 p2 on l1, Q = b1 q1 + b2 q2
/// on l2. Both are polynomials in (a1, a2, b1, b2).
struct RuledLineCondition {
  CycPoly u2v;
  CycPoly uv2;
};

/// p = c q for some nonzero scalar c (both zero counts as proportional).
inline bool proportional(const CycPoly& p, const CycPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.terms().size() != q.terms().size()) return false;
  const auto& [m0, c0] = *q.terms().begin();
  Cyclotomic ratio = p.coefficient(m0) / c0;
  if (cubicfold::is_zero(ratio)) return false;
  return (p - ratio * q).is_zero();
}

namespace detail {

inline bool line_in_cubic(const CycPoly& f, const std::vector<Cyclotomic>& p1, const std::vector<Cyclotomic>& p2) {
  std::vector<CycPoly> images;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    CycPoly l(2);
    if (!cubicfold::is_zero(p1[i])) l.add_term(Monomial::variable(2, 0), p1[i]);
    if (!cubicfold::is_zero(p2[i])) l.add_term(Monomial::variable(2, 1), p2[i]);
    images.push_back(std::move(l));
  }
  return substitute(f, images, 2).is_zero();
}

}  // namespace detail

inline RuledLineCondition ruled_lines_between(const CubicFourfold& x, const Matrix<Cyclotomic>& l1,
                                              const Matrix<Cyclotomic>& l2) {
  const CycPoly& f = x.form;
  std::size_t n = f.nvars();
  if (l1.size() != 2 || l2.size() != 2) throw std::invalid_argument("a line needs two basis vectors");
  for (const auto* l : {&l1, &l2})
    if ((*l)[0].size() != n || (*l)[1].size() != n) throw std::invalid_argument("line basis does not match the variable count");
  if (!detail::line_in_cubic(f, l1[0], l1[1]) || !detail::line_in_cubic(f, l2[0], l2[1]))
    throw std::invalid_argument("line not contained in X");
  // ring (u, v, a1, a2, b1, b2)
  auto var = [](std::size_t i) { return CycPoly::variable(6, i); };
  std::vector<CycPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    CycPoly lp(6), lq(6);
    if (!cubicfold::is_zero(l1[0][i])) lp += l1[0][i] * var(2);
    if (!cubicfold::is_zero(l1[1][i])) lp += l1[1][i] * var(3);
    if (!cubicfold::is_zero(l2[0][i])) lq += l2[0][i] * var(4);
    if (!cubicfold::is_zero(l2[1][i])) lq += l2[1][i] * var(5);
    images.push_back(var(0) * lp + var(1) * lq);
  }
  CycPoly g = substitute(f, images, 6);
  RuledLineCondition out{CycPoly(4), CycPoly(4)};
  for (const auto& [m, c] : g.terms()) {
    Monomial r(std::vector<int>(m.exponents.begin() + 2, m.exponents.end()));
    if (m.exponents[0] == 2 && m.exponents[1] == 1) out.u2v.add_term(r, c);
    if (m.exponents[0] == 1 && m.exponents[1] == 2) out.uv2.add_term(r, c);
  }
  return out;
}

/// Number of F_p-rational lines on the cubic surface V(f) in P^3, f in four variables.
/// The specialized surface must be smooth.
inline std::uint64_t count_lines_on_cubic_surface(const CycPoly& f, const SpecializationMap& s) {
  if (f.nvars() != 4 || !f.is_homogeneous(3)) throw std::invalid_argument("expected a cubic form in four variables");
  std::uint64_t p = s.prime;
  if (p <= 3) throw std::invalid_argument("line counts need p > 3");
  std::vector<std::vector<detail::ModTerm>> partials;
  for (std::size_t i = 0; i < 4; ++i) partials.push_back(detail::reduce_mod(f.derivative(i), s));
  if (detail::first_common_zero(partials, 4, p, 1)) throw std::domain_error("singular specialization");
  auto fm = detail::reduce_mod(f, s);

  // lines as reduced echelon 2 x 4 matrices; a cubic vanishing at 4 points of a line vanishes on it
  std::uint64_t count = 0;
  std::vector<std::uint64_t> r1(4), r2(4), pt(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      std::vector<std::size_t> free1, free2;
      for (std::size_t c = i + 1; c < 4; ++c)
        if (c != j) free1.push_back(c);
      for (std::size_t c = j + 1; c < 4; ++c) free2.push_back(c);
      std::size_t nf = free1.size() + free2.size();
      std::uint64_t total = 1;
      for (std::size_t t = 0; t < nf; ++t) total *= p;
      for (std::uint64_t code = 0; code < total; ++code) {
        std::fill(r1.begin(), r1.end(), 0);
        std::fill(r2.begin(), r2.end(), 0);
        r1[i] = 1;
        r2[j] = 1;
        std::uint64_t c = code;
        for (auto col : free1) r1[col] = c % p, c /= p;
        for (auto col : free2) r2[col] = c % p, c /= p;
        bool on = true;
        const std::uint64_t coefs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, p - 1}};
        for (const auto& st : coefs) {
          for (std::size_t t = 0; t < 4; ++t) pt[t] = (st[0] * r1[t] + st[1] * r2[t]) % p;
          if (detail::eval_mod(fm, pt, p) != 0) {
            on = false;
            break;
          }
        }
        if (on) ++count;
      }
    }
  return count;
}

}  // namespace cubicfold
