#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubicfold/linalg.hpp"
#include "cubicfold/mpoly/monomial.hpp"

namespace cubicfold {

/// Sparse polynomial in a fixed number of variables. Zero coefficients are never stored.
template <class C>
class MultiPoly {
 public:
  using Coeff = C;
  using TermMap = std::map<Monomial, C, GrevlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const C& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
  }
  static MultiPoly variable(std::size_t nvars, std::size_t i) {
    MultiPoly p(nvars);
    p.add_term(Monomial::variable(nvars, i), C(1L));
    return p;
  }
  static MultiPoly monomial(const Monomial& m, const C& c = C(1L)) {
    MultiPoly p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0L) : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial variable count mismatch");
    if (cubicfold::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = it->second + c;
    if (cubicfold::is_zero(it->second)) terms_.erase(it);
  }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree);
    return d;
  }
  bool is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
      if (m.degree != d) return false;
    return true;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a.check(b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    a.check(b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
  }
  MultiPoly operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  friend MultiPoly operator*(const C& s, const MultiPoly& a) {
    MultiPoly out(a.nvars_);
    if (cubicfold::is_zero(s)) return out;
    for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
    return out;
  }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(nvars_, C(1L));
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (!(m == it->first) || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  C evaluate(const std::vector<C>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("point length must equal variable count");
    C acc(0L);
    for (const auto& [m, c] : terms_) {
      C t = c;
      for (std::size_t i = 0; i < nvars_ && !cubicfold::is_zero(t); ++i)
        for (int k = 0; k < m[i]; ++k) t = t * point[i];
      acc = acc + t;
    }
    return acc;
  }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
      int e = m[var];
      if (e == 0) continue;
      auto ex = m.exponents;
      --ex[var];
      out.add_term(Monomial(std::move(ex)), C(static_cast<long>(e)) * c);
    }
    return out;
  }

  /// Applies f to every coefficient, e.g. a specialization into a prime field.
  template <class D, class Fn>
  MultiPoly<D> map_coeffs(Fn&& f) const {
    MultiPoly<D> out(nvars_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

 private:
  void check(const MultiPoly& b) const {
    if (nvars_ != b.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

template <class C>
std::vector<MultiPoly<C>> partial_derivatives(const MultiPoly<C>& f) {
  std::vector<MultiPoly<C>> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(f.derivative(i));
  return out;
}

template <class C>
C evaluate(const MultiPoly<C>& f, const std::vector<C>& point) {
  return f.evaluate(point);
}

/// Replaces x_i by images[i] (polynomials in out_vars variables).
template <class C>
MultiPoly<C> substitute(const MultiPoly<C>& f, const std::vector<MultiPoly<C>>& images, std::size_t out_vars) {
  if (images.size() != f.nvars()) throw std::invalid_argument("one image per variable required");
  std::vector<std::vector<MultiPoly<C>>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const MultiPoly<C>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly<C>::constant(out_vars, C(1L)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  MultiPoly<C> out(out_vars);
  for (const auto& [m, c] : f.terms()) {
    MultiPoly<C> t = MultiPoly<C>::constant(out_vars, c);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i] > 0) t *= power(i, m[i]);
    out += t;
  }
  return out;
}

/// Returns F(M x): variable x_i is replaced by the i-th entry of M x.
/// With this convention substitute_linear(F, A*B) = substitute_linear(substitute_linear(F, A), B).
template <class C>
MultiPoly<C> substitute_linear(const MultiPoly<C>& f, const Matrix<C>& m) {
  std::size_t n = f.nvars();
  if (m.size() != n) throw std::invalid_argument("substitution matrix must be square of size nvars");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("substitution matrix must be square of size nvars");
  std::vector<MultiPoly<C>> images;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly<C> l(n);
    for (std::size_t j = 0; j < n; ++j) l.add_term(Monomial::variable(n, j), m[i][j]);
    images.push_back(std::move(l));
  }
  return substitute(f, images, n);
}

template <class C>
bool is_zero(const MultiPoly<C>& p) {
  return p.is_zero();
}

}  // namespace cubicfold
