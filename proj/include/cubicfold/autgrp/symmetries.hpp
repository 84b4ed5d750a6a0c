#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cubicfold/autgrp/automorphism.hpp"

namespace cubicfold {

namespace detail {

/// e with a == zeta_n^e, if a is an n-th root of unity.
inline std::optional<long> nth_root_exponent(const Cyclotomic& a, unsigned n) {
  unsigned m = std::lcm(a.order(), n);
  Cyclotomic x = a.embed(m);
  for (unsigned e = 0; e < n; ++e)
    if (x == Cyclotomic::zeta(m, static_cast<long>(e) * (m / n))) return e;
  return std::nullopt;
}

}  // namespace detail

/// All monomial automorphisms pi * diag(zeta_n^w) with F(M x) = lambda F(x), one per
/// projective class (w0 = 0). Throws when the search visits more than budget nodes.
inline std::vector<ProjectiveAutomorphism> monomial_symmetries(const CycPoly& f, unsigned n,
                                                               std::size_t budget = 50'000'000) {
  std::size_t nv = f.nvars();
  if (nv > 8) throw std::invalid_argument("monomial symmetry search supports at most 8 variables");
  if (n == 0) throw std::invalid_argument("root order must be positive");
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<Monomial> supp;
  std::vector<Cyclotomic> coeff;
  for (const auto& [m, c] : f.terms()) {
    supp.push_back(m);
    coeff.push_back(c);
  }
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < supp.size(); ++k) index[supp[k].exponents] = k;

  std::vector<ProjectiveAutomorphism> out;
  std::size_t nodes = 0;
  std::vector<int> perm(nv);
  std::iota(perm.begin(), perm.end(), 0);
  long sn = static_cast<long>(n);
  do {
    // image of each support monomial under the permutation
    std::vector<std::size_t> image(supp.size());
    bool ok = true;
    for (std::size_t k = 0; k < supp.size() && ok; ++k) {
      std::vector<int> e(nv, 0);
      for (std::size_t i = 0; i < nv; ++i) e[static_cast<std::size_t>(perm[i])] += supp[k][i];
      auto it = index.find(e);
      if (it == index.end())
        ok = false;
      else
        image[k] = it->second;
    }
    if (!ok) continue;
    // zeta^{w.a_k - w.a_0} must equal r_k / r_0 with r_k = c_{image k} / c_k
    Cyclotomic r0 = coeff[image[0]] / coeff[0];
    std::vector<long> target(supp.size(), 0);
    for (std::size_t k = 1; k < supp.size() && ok; ++k) {
      auto e = detail::nth_root_exponent(coeff[image[k]] / coeff[k] / r0, n);
      if (!e)
        ok = false;
      else
        target[k] = *e;
    }
    if (!ok) continue;
    std::vector<std::vector<std::size_t>> ready(nv);
    for (std::size_t k = 1; k < supp.size(); ++k) {
      std::size_t last = 0;
      for (std::size_t i = 0; i < nv; ++i)
        if (supp[k][i] != supp[0][i]) last = i;
      ready[last].push_back(k);
    }
    std::vector<long> w(nv, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (++nodes > budget) throw std::runtime_error("monomial symmetry search exceeded budget");
      if (i == nv) {
        out.push_back(ProjectiveAutomorphism::monomial(perm, n, w));
        return;
      }
      long hi = i == 0 ? 1 : sn;
      for (long v = 0; v < hi; ++v) {
        w[i] = v;
        bool good = true;
        for (auto k : ready[i])
          if (arith::mod_floor(supp[k].weight(w) - supp[0].weight(w) - target[k], sn) != 0) {
            good = false;
            break;
          }
        if (good) self(self, i + 1);
      }
      w[i] = 0;
    };
    rec(rec, 0);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace cubicfold
