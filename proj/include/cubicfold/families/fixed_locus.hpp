#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicfold/autgrp/automorphism.hpp"
#include "cubicfold/families/cubic.hpp"

namespace cubicfold {

struct Eigenspace {
  Cyclotomic eigenvalue;
  Matrix<Cyclotomic> basis;  // rows
  std::size_t dimension() const { return basis.size(); }
};

namespace detail {

inline Matrix<Cyclotomic> embed_matrix(Matrix<Cyclotomic> m, unsigned order) {
  for (auto& row : m)
    for (auto& x : row) x = x.embed(order);
  return m;
}

/// Exact k-th root of a positive rational, if it is one.
inline std::optional<Rational> rational_root(const Rational& q, unsigned k) {
  mpz_class num = q.get_num(), den = q.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return std::nullopt;
  return Rational(rn, rd);
}

/// Some mu with mu^k == s, as a cyclotomic number.
inline Cyclotomic cyclotomic_kth_root(const Cyclotomic& s, unsigned k) {
  unsigned l = 2 * s.order();
  Cyclotomic se = s.embed(l);
  for (unsigned a = 0; a < l; ++a) {
    Cyclotomic t = se * Cyclotomic::zeta(l, -static_cast<std::int64_t>(a));
    if (!t.is_rational() || sgn(t.rational_part()) <= 0) continue;
    Rational q = t.rational_part();
    Cyclotomic rho = Cyclotomic::zeta(l * k, a);
    if (auto r = rational_root(q, k)) return rho * Cyclotomic(*r);
    if (k % 2 == 0) {
      if (auto r = rational_root(q, k / 2)) {
        // sqrt(num/den) = sqrt(num*den)/den
        mpz_class nd = r->get_num() * r->get_den();
        if (!nd.fits_slong_p()) break;
        std::int64_t v = nd.get_si();
        unsigned order = std::lcm(l * k, sqrt_conductor(v));
        Cyclotomic root = cyclotomic_sqrt(v, order).scaled(Rational(1) / Rational(r->get_den()));
        return root * rho.embed(order);
      }
    }
    break;
  }
  throw std::runtime_error("could not extract a root of the scalar power of the automorphism");
}

}  // namespace detail

/// Eigenspace decomposition of M; the fixed locus in projective space is the disjoint
/// union of the projectivized eigenspaces.
inline std::vector<Eigenspace> fixed_locus_p5(const ProjectiveAutomorphism& m) {
  std::size_t n = m.size();
  std::vector<Eigenspace> out;
  if (m.is_diagonal()) {
    const auto& t = *m.tag();
    std::map<long, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[t.weights[i]].push_back(i);
    for (const auto& [w, idx] : groups) {
      Eigenspace e{Cyclotomic::zeta(t.n, w), {}};
      for (auto i : idx) {
        std::vector<Cyclotomic> v(n, Cyclotomic(0L));
        v[i] = Cyclotomic(1L);
        e.basis.push_back(std::move(v));
      }
      out.push_back(std::move(e));
    }
    return out;
  }
  unsigned k = order_in_pgl(m);
  Cyclotomic s = m.pow(k).matrix()[0][0];
  Cyclotomic mu = detail::cyclotomic_kth_root(s, k);
  unsigned order = std::lcm(std::lcm(mu.order(), m.entry_order()), k);
  Cyclotomic mu_inv = mu.embed(order).inverse();
  Matrix<Cyclotomic> base = detail::embed_matrix(m.matrix(), order);
  for (auto& row : base)
    for (auto& x : row)
      if (!is_zero(x)) x = x * mu_inv;
  // powers of the rescaled matrix, which has order k
  std::vector<Matrix<Cyclotomic>> powers{detail::embed_matrix(identity_matrix<Cyclotomic>(n), order)};
  for (unsigned i = 1; i < k; ++i) powers.push_back(matmul(powers.back(), base));
  for (unsigned j = 0; j < k; ++j) {
    Matrix<Cyclotomic> proj(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(order)));
    for (unsigned i = 0; i < k; ++i) {
      Cyclotomic z = Cyclotomic::zeta(k, -static_cast<std::int64_t>(i * j)).embed(order);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (!is_zero(powers[i][r][c])) proj[r][c] += z * powers[i][r][c];
    }
    Matrix<Cyclotomic> cols = transpose(proj);
    auto piv = rref(cols);
    if (piv.empty()) continue;
    cols.resize(piv.size());
    out.push_back(Eigenspace{mu.embed(order) * Cyclotomic::zeta(k, j).embed(order), std::move(cols)});
  }
  return out;
}

enum class FixedKind { points, curve, surface, threefold, subspace };

inline std::string to_string(FixedKind k) {
  switch (k) {
    case FixedKind::points: return "isolated points";
    case FixedKind::curve: return "curve";
    case FixedKind::surface: return "surface";
    case FixedKind::threefold: return "threefold";
    case FixedKind::subspace: return "contained subspace";
  }
  return "?";
}

struct FixedComponent {
  FixedKind kind = FixedKind::points;
  Cyclotomic eigenvalue;
  Matrix<Cyclotomic> eigenspace;
  std::size_t point_count = 0;
  std::vector<std::vector<Cyclotomic>> points;  // those with coordinates in the working field
  std::string root_structure;                   // dim 2 only: "distinct", "double+simple", "triple", "single"
  std::optional<CycPoly> equation;               // F restricted to the eigenspace
};

struct FixedLocusReport {
  std::vector<FixedComponent> components;

  std::size_t isolated_points() const {
    std::size_t n = 0;
    for (const auto& c : components)
      if (c.kind == FixedKind::points) n += c.point_count;
    return n;
  }
  std::size_t count(FixedKind k) const {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [&](const FixedComponent& c) { return c.kind == k; }));
  }
  /// e.g. "surface + 2 points"
  std::string shape() const {
    std::string out;
    for (auto k : {FixedKind::subspace, FixedKind::threefold, FixedKind::surface, FixedKind::curve}) {
      std::size_t c = count(k);
      if (!c) continue;
      if (!out.empty()) out += " + ";
      out += std::to_string(c) + " " + to_string(k);
    }
    if (!out.empty()) out += " + ";
    return out + std::to_string(isolated_points()) + " points";
  }
};

namespace detail {

inline std::vector<std::int64_t> divisors(std::int64_t v) {
  std::uint64_t a = static_cast<std::uint64_t>(v < 0 ? -v : v);
  std::vector<std::int64_t> ds{1};
  for (auto [p, e] : arith::factorize(a)) {
    std::size_t base = ds.size();
    std::int64_t pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= static_cast<std::int64_t>(p);
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  return ds;
}

/// Rational roots (s:t) of a s^3 + b s^2 t + c s t^2 + d t^3 with rational coefficients.
inline std::vector<std::pair<Rational, Rational>> rational_binary_roots(std::vector<Rational> coef) {
  std::vector<std::pair<Rational, Rational>> out;
  if (sgn(coef[0]) == 0) out.emplace_back(1, 0);
  // h(x) = a x^3 + b x^2 + c x + d at s = x, t = 1; clear denominators
  mpz_class l = 1;
  for (const auto& q : coef) l = lcm(l, mpz_class(q.get_den()));
  std::vector<mpz_class> h;
  for (const auto& q : coef) h.push_back(mpz_class(q * l));
  while (!h.empty() && h.front() == 0) h.erase(h.begin());
  if (h.empty()) return out;
  if (h.back() == 0) {
    out.emplace_back(0, 1);
    while (h.back() == 0) h.pop_back();
  }
  if (h.size() == 1) return out;
  if (!h.front().fits_slong_p() || !h.back().fits_slong_p()) return out;
  if (abs(h.front()) > 1000000000000L || abs(h.back()) > 1000000000000L) return out;
  for (auto pnum : divisors(h.back().get_si()))
    for (auto q : divisors(h.front().get_si()))
      for (int sign : {1, -1}) {
        Rational x(sign * pnum, q);
        x.canonicalize();
        Rational acc = 0;
        for (const auto& c : h) acc = acc * x + Rational(c);
        if (sgn(acc) != 0) continue;
        bool dup = false;
        for (const auto& [s, t] : out) dup = dup || (sgn(t) != 0 && s == x);
        if (!dup) out.emplace_back(x, 1);
      }
  return out;
}

}  // namespace detail

/// Fixed locus of M on X = V(F), one component per eigenspace that meets X.
inline FixedLocusReport fixed_locus_on_x(const CubicFourfold& x, const ProjectiveAutomorphism& m) {
  const CycPoly& f = x.form;
  if (!semi_invariance(f, m)) throw std::invalid_argument("cubic is not semi-invariant under the automorphism");
  FixedLocusReport report;
  for (auto& e : fixed_locus_p5(m)) {
    std::size_t d = e.dimension();
    std::vector<CycPoly> images;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      CycPoly l(d);
      for (std::size_t j = 0; j < d; ++j) l.add_term(Monomial::variable(d, j), e.basis[j][i]);
      images.push_back(std::move(l));
    }
    CycPoly g = substitute(f, images, d);
    FixedComponent comp;
    comp.eigenvalue = e.eigenvalue;
    comp.eigenspace = e.basis;
    if (cubicfold::is_zero(g) && d == 1) {
      comp.point_count = 1;
      comp.root_structure = "single";
      comp.points.push_back(e.basis[0]);
      report.components.push_back(std::move(comp));
      continue;
    }
    if (cubicfold::is_zero(g)) {
      comp.kind = FixedKind::subspace;
      report.components.push_back(std::move(comp));
      continue;
    }
    comp.equation = g;
    if (d == 1) continue;  // nonzero constant times t^3: the point is not on X
    if (d == 2) {
      auto co = [&](int i, int j) { return g.coefficient(Monomial({i, j})); };
      Cyclotomic a = co(3, 0), b = co(2, 1), c = co(1, 2), dd = co(0, 3);
      Cyclotomic disc = b * b * c * c - Cyclotomic(4L) * a * c * c * c - Cyclotomic(4L) * b * b * b * dd -
                        Cyclotomic(27L) * a * a * dd * dd + Cyclotomic(18L) * a * b * c * dd;
      Cyclotomic h0 = b * b - Cyclotomic(3L) * a * c, h1 = b * c - Cyclotomic(9L) * a * dd,
                 h2 = c * c - Cyclotomic(3L) * b * dd;
      comp.kind = FixedKind::points;
      if (!is_zero(disc)) {
        comp.point_count = 3;
        comp.root_structure = "distinct";
      } else if (!is_zero(h0) || !is_zero(h1) || !is_zero(h2)) {
        comp.point_count = 2;
        comp.root_structure = "double+simple";
      } else {
        comp.point_count = 1;
        comp.root_structure = "triple";
      }
      if (a.is_rational() && b.is_rational() && c.is_rational() && dd.is_rational()) {
        auto roots = detail::rational_binary_roots({a.rational_part(), b.rational_part(), c.rational_part(),
                                                    dd.rational_part()});
        for (const auto& [s, t] : roots) {
          std::vector<Cyclotomic> p(f.nvars(), Cyclotomic(0L));
          for (std::size_t i = 0; i < f.nvars(); ++i)
            p[i] = e.basis[0][i] * Cyclotomic(s) + e.basis[1][i] * Cyclotomic(t);
          comp.points.push_back(std::move(p));
        }
      }
      report.components.push_back(std::move(comp));
      continue;
    }
    comp.kind = d == 3 ? FixedKind::curve : d == 4 ? FixedKind::surface : FixedKind::threefold;
    report.components.push_back(std::move(comp));
  }
  return report;
}

}  // namespace cubicfold
