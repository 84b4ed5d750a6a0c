#pragma once

#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicfold/cert/smooth.hpp"
#include "cubicfold/families/cubic.hpp"
#include "cubicfold/linalg.hpp"

namespace cubicfold {

/// Projective plane spanned by three independent vectors, kept in reduced echelon form.
struct PlaneInP5 {
  Matrix<Cyclotomic> basis;

  static PlaneInP5 from_basis(Matrix<Cyclotomic> b) {
    if (b.size() != 3) throw std::invalid_argument("a plane needs three basis vectors");
    unsigned o = 1;
    for (const auto& row : b)
      for (const auto& x : row) o = std::lcm(o, x.order());
    for (auto& row : b)
      for (auto& x : row) x = x.embed(o);
    if (rref(b).size() != 3) throw std::invalid_argument("degenerate plane basis");
    return PlaneInP5{std::move(b)};
  }

  /// Plane cut out by linear forms (rows of coefficients).
  static PlaneInP5 from_equations(const Matrix<Cyclotomic>& forms, std::size_t nvars) {
    auto k = kernel(forms, nvars);
    if (k.size() != 3) throw std::invalid_argument("equations do not cut out a plane");
    return from_basis(std::move(k));
  }

  std::string key() const {
    std::string s;
    for (const auto& row : basis) {
      for (const auto& x : row) s += x.to_string() + ",";
      s += ";";
    }
    return s;
  }
};

/// Same projective plane (entries may live in different cyclotomic fields).
inline bool operator==(const PlaneInP5& a, const PlaneInP5& b) {
  if (a.basis[0].size() != b.basis[0].size()) return false;
  Matrix<Cyclotomic> m = a.basis;
  m.insert(m.end(), b.basis.begin(), b.basis.end());
  unsigned o = 1;
  for (const auto& row : m)
    for (const auto& x : row) o = std::lcm(o, x.order());
  for (auto& row : m)
    for (auto& x : row) x = x.embed(o);
  return rank(m) == 3;
}

/// F restricted to the plane is the zero form.
inline bool contains_plane(const CubicFourfold& x, const PlaneInP5& plane) {
  const CycPoly& f = x.form;
  if (plane.basis.size() != 3 || plane.basis[0].size() != f.nvars())
    throw std::invalid_argument("plane basis does not match the variable count");
  Matrix<Cyclotomic> b = plane.basis;
  if (rank(b) != 3) throw std::invalid_argument("degenerate plane basis");
  std::vector<CycPoly> images;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    CycPoly l(3);
    for (std::size_t j = 0; j < 3; ++j) l.add_term(Monomial::variable(3, j), plane.basis[j][i]);
    images.push_back(std::move(l));
  }
  return substitute(f, images, 3).is_zero();
}

/// Projective planes with empty intersection.
inline bool planes_disjoint(const PlaneInP5& a, const PlaneInP5& b) {
  Matrix<Cyclotomic> m = a.basis;
  m.insert(m.end(), b.basis.begin(), b.basis.end());
  unsigned o = 1;
  for (const auto& row : m)
    for (const auto& x : row) o = std::lcm(o, x.order());
  for (auto& row : m)
    for (auto& x : row) x = x.embed(o);
  return rank(m) == 6;
}

namespace detail {

inline std::uint64_t eval_mod(const std::vector<ModTerm>& f, const std::vector<std::uint64_t>& x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const auto& t : f) {
    std::uint64_t v = t.coef;
    for (std::size_t i = 0; i < x.size() && v; ++i)
      for (int e = 0; e < t.exps[i]; ++e) v = v * x[i] % p;
    acc = (acc + v) % p;
  }
  return acc;
}

/// Kernel of a 3 x n matrix over F_p; empty unless the rank is 3.
inline std::vector<std::vector<std::uint64_t>> kernel_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  std::size_t n = m[0].size(), r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t k = r;
    while (k < m.size() && m[k][c] == 0) ++k;
    if (k == m.size()) continue;
    std::swap(m[k], m[r]);
    std::uint64_t inv = arith::invmod(m[r][c], p);
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
    }
    piv.push_back(c);
    ++r;
  }
  if (r != 3) return {};
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<std::uint64_t> v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - m[i][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// Planes cut out by three forms, each a single coordinate or x_a + zeta_n^k x_b, that lie
/// on X. Candidates are screened mod p, then confirmed exactly.
inline std::vector<PlaneInP5> search_pattern_planes(const CubicFourfold& x, unsigned n,
                                                    std::uint64_t budget = 50'000'000) {
  if (n == 0) throw std::invalid_argument("root order must be positive");
  const CycPoly& f = x.form;
  std::size_t nv = f.nvars();
  unsigned order = std::lcm(n, x.field_order);
  std::vector<std::vector<Cyclotomic>> forms;
  for (std::size_t a = 0; a < nv; ++a) {
    std::vector<Cyclotomic> v(nv, Cyclotomic::zero(order));
    v[a] = Cyclotomic(1).embed(order);
    forms.push_back(v);
  }
  for (std::size_t a = 0; a < nv; ++a)
    for (std::size_t b = a + 1; b < nv; ++b)
      for (unsigned k = 0; k < n; ++k) {
        std::vector<Cyclotomic> v(nv, Cyclotomic::zero(order));
        v[a] = Cyclotomic(1).embed(order);
        v[b] = Cyclotomic::zeta(n, k).embed(order);
        forms.push_back(v);
      }
  std::uint64_t m = forms.size();
  if (m * (m - 1) * (m - 2) / 6 > budget) throw std::runtime_error("pattern budget exceeded");

  SpecializationMap s = find_specialization(order, x.surds, 7, 1'000'000);
  std::uint64_t p = s.prime;
  auto fmod = detail::reduce_mod(f, s);
  std::vector<std::vector<std::uint64_t>> forms_mod;
  for (const auto& v : forms) {
    std::vector<std::uint64_t> w;
    for (const auto& c : v) w.push_back(s.image(c));
    forms_mod.push_back(std::move(w));
  }
  // 10 points of the degree-3 principal lattice determine a ternary cubic
  std::vector<std::array<std::uint64_t, 3>> lattice;
  for (std::uint64_t i = 0; i <= 3; ++i)
    for (std::uint64_t j = 0; i + j <= 3; ++j) lattice.push_back({i, j, 3 - i - j});

  std::vector<PlaneInP5> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        auto ker = detail::kernel_mod({forms_mod[i], forms_mod[j], forms_mod[k]}, p);
        if (!ker.empty()) {
          bool vanish = true;
          for (const auto& c : lattice) {
            std::vector<std::uint64_t> pt(nv);
            for (std::size_t t = 0; t < nv; ++t) pt[t] = (c[0] * ker[0][t] + c[1] * ker[1][t] + c[2] * ker[2][t]) % p;
            if (detail::eval_mod(fmod, pt, p) != 0) {
              vanish = false;
              break;
            }
          }
          if (!vanish) continue;
        }
        // exact confirmation (also reached when the rank drops mod p)
        Matrix<Cyclotomic> eq{forms[i], forms[j], forms[k]};
        auto exact = kernel(eq, nv);
        if (exact.size() != 3) continue;
        PlaneInP5 plane = PlaneInP5::from_basis(std::move(exact));
        if (!contains_plane(x, plane)) continue;
        if (seen.insert(plane.key()).second) out.push_back(std::move(plane));
      }
  return out;
}

}  // namespace cubicfold
