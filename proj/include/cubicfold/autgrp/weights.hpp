#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "cubicfold/autgrp/automorphism.hpp"

namespace cubicfold {

/// Diagonal action diag(zeta_n^w) with every monomial of a support having weight c mod n.
struct WeightSystem {
  unsigned n = 1;
  std::vector<long> weights;
  long c = 0;

  friend bool operator<(const WeightSystem& a, const WeightSystem& b) {
    return std::tie(a.n, a.weights, a.c) < std::tie(b.n, b.weights, b.c);
  }
  friend bool operator==(const WeightSystem& a, const WeightSystem& b) {
    return a.n == b.n && a.weights == b.weights && a.c == b.c;
  }

  bool satisfied_by(const Monomial& m) const {
    return arith::mod_floor(m.weight(weights), n) == arith::mod_floor(c, n);
  }

  ProjectiveAutomorphism automorphism() const { return ProjectiveAutomorphism::diagonal(n, weights); }

  /// Representative with w0 = 0 and the lexicographically least unit multiple.
  WeightSystem canonical() const {
    if (weights.empty()) return *this;
    long sn = static_cast<long>(n);
    long t = weights[0];
    std::vector<long> w(weights.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = arith::mod_floor(weights[i] - t, sn);
    long cc = arith::mod_floor(c - 3 * t, sn);
    WeightSystem best{n, w, cc};
    for (long u = 2; u < sn; ++u) {
      if (std::gcd(u, sn) != 1) continue;
      WeightSystem cand{n, w, arith::mod_floor(u * cc, sn)};
      for (auto& x : cand.weights) x = arith::mod_floor(u * x, sn);
      if (std::tie(cand.weights, cand.c) < std::tie(best.weights, best.c)) best = cand;
    }
    return best;
  }
};

/// All (w, c) mod n with every support monomial of weight c, up to shifting w by a
/// constant and scaling by units mod n. Each class is given by its canonical form.
inline std::set<WeightSystem> solve_weight_system(const std::vector<Monomial>& support, unsigned n) {
  if (n < 2) throw std::invalid_argument("weight modulus must be at least 2");
  std::set<WeightSystem> out;
  if (support.empty()) return out;
  std::size_t nv = support[0].nvars();
  long sn = static_cast<long>(n);
  // constraint k: weight(support[k]) == weight(support[0]); checked once its last variable is set
  std::vector<std::vector<std::size_t>> ready(nv);
  for (std::size_t k = 1; k < support.size(); ++k) {
    std::size_t last = 0;
    for (std::size_t i = 0; i < nv; ++i)
      if (support[k][i] != support[0][i]) last = i;
    ready[last].push_back(k);
  }
  std::vector<long> w(nv, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == nv) {
      long c = arith::mod_floor(support[0].weight(w), sn);
      out.insert(WeightSystem{n, w, c}.canonical());
      return;
    }
    long hi = i == 0 ? 1 : sn;  // w0 = 0 fixes the shift
    for (long v = 0; v < hi; ++v) {
      w[i] = v;
      bool ok = true;
      for (auto k : ready[i])
        if (arith::mod_floor(support[k].weight(w) - support[0].weight(w), sn) != 0) {
          ok = false;
          break;
        }
      if (ok) self(self, i + 1);
    }
    w[i] = 0;
  };
  rec(rec, 0);
  return out;
}

inline std::vector<Monomial> support_of(const CycPoly& f) {
  std::vector<Monomial> s;
  for (const auto& [m, c] : f.terms()) s.push_back(m);
  return s;
}

/// Whether ws solves the system, i.e. every support monomial has weight c.
inline bool solves(const WeightSystem& ws, const std::vector<Monomial>& support) {
  return std::all_of(support.begin(), support.end(), [&](const Monomial& m) { return ws.satisfied_by(m); });
}

inline bool contains_equivalent(const std::set<WeightSystem>& sols, const WeightSystem& ws) {
  return sols.count(ws.canonical()) > 0;
}

}  // namespace cubicfold
