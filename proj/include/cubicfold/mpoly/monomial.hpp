#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicfold {

struct Monomial {
  std::vector<int> exponents;
  int degree = 0;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {
    for (int x : exponents)
      if (x < 0) throw std::invalid_argument("negative exponent");
    degree = std::accumulate(exponents.begin(), exponents.end(), 0);
  }

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i) {
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    return Monomial(std::move(e));
  }
  /// Product of the listed variables, e.g. of_indices(6, {0, 0, 4}) = x0^2*x4.
  static Monomial of_indices(std::size_t nvars, std::initializer_list<int> idx) {
    std::vector<int> e(nvars, 0);
    for (int i : idx) ++e.at(static_cast<std::size_t>(i));
    return Monomial(std::move(e));
  }

  std::size_t nvars() const { return exponents.size(); }
  int operator[](std::size_t i) const { return exponents[i]; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial variable count mismatch");
    std::vector<int> e(a.exponents);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents[i];
    return Monomial(std::move(e));
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents == b.exponents; }

  /// Weight sum against an integer weight vector.
  long weight(const std::vector<long>& w) const {
    long s = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) s += exponents[i] * w.at(i);
    return s;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += names.at(i);
      if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
  }
};

/// Graded reverse lexicographic order, largest first. Used as the map comparator
/// so that iteration follows the canonical order.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree != b.degree) return a.degree > b.degree;
    for (std::size_t i = a.exponents.size(); i-- > 0;)
      if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i];
    return false;
  }
};

/// All monomials of the given degree, in grevlex order (largest first).
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  if (nvars == 0) return out;
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

}  // namespace cubicfold
