#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicfold/linalg.hpp"
#include "cubicfold/mpoly/parser.hpp"

namespace cubicfold {

/// (M x)_i = zeta_n^{weights[i]} * x_{perm[i]}.
struct MonomialTag {
  unsigned n = 1;
  std::vector<int> perm;
  std::vector<long> weights;

  bool is_diagonal() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != static_cast<int>(i)) return false;
    return true;
  }
};

/// Invertible matrix regarded up to scalar; acts on coordinates by x -> M x.
class ProjectiveAutomorphism {
 public:
  ProjectiveAutomorphism() = default;

  static ProjectiveAutomorphism from_matrix(Matrix<Cyclotomic> m, std::string label = {}) {
    if (m.empty()) throw std::invalid_argument("empty matrix");
    for (const auto& row : m)
      if (row.size() != m.size()) throw std::invalid_argument("automorphism matrix must be square");
    if (is_zero(determinant(m))) throw std::invalid_argument("automorphism matrix is singular");
    ProjectiveAutomorphism a;
    a.size_ = m.size();
    a.matrix_ = std::move(m);
    a.label = std::move(label);
    return a;
  }

  static ProjectiveAutomorphism monomial(std::vector<int> perm, unsigned n, std::vector<long> weights,
                                         std::string label = {}) {
    if (perm.size() != weights.size() || perm.empty()) throw std::invalid_argument("permutation/weight length mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
      if (p < 0 || p >= static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(p)])
        throw std::invalid_argument("monomial automorphism needs a permutation (non-invertible map)");
      seen[static_cast<std::size_t>(p)] = true;
    }
    if (n == 0) throw std::invalid_argument("root order must be positive");
    for (auto& w : weights) w = arith::mod_floor(w, n);
    ProjectiveAutomorphism a;
    a.size_ = perm.size();
    a.tag_ = MonomialTag{n, std::move(perm), std::move(weights)};
    a.label = std::move(label);
    return a;
  }

  static ProjectiveAutomorphism diagonal(unsigned n, std::vector<long> weights, std::string label = {}) {
    std::vector<int> perm(weights.size());
    std::iota(perm.begin(), perm.end(), 0);
    return monomial(std::move(perm), n, std::move(weights), std::move(label));
  }

  std::size_t size() const { return size_; }
  const std::optional<MonomialTag>& tag() const { return tag_; }
  bool is_monomial() const { return tag_.has_value(); }
  bool is_diagonal() const { return tag_ && tag_->is_diagonal(); }

  /// The matrix; materialized on demand for tagged automorphisms.
  Matrix<Cyclotomic> matrix() const {
    if (!tag_) return matrix_;
    Matrix<Cyclotomic> m(size_, std::vector<Cyclotomic>(size_, Cyclotomic(0L)));
    for (std::size_t i = 0; i < size_; ++i)
      m[i][static_cast<std::size_t>(tag_->perm[i])] = Cyclotomic::zeta(tag_->n, tag_->weights[i]);
    return m;
  }

  Cyclotomic determinant_value() const {
    if (!tag_) return determinant(matrix_);
    long s = std::accumulate(tag_->weights.begin(), tag_->weights.end(), 0L);
    Cyclotomic d = Cyclotomic::zeta(tag_->n, s);
    return permutation_sign(tag_->perm) < 0 ? -d : d;
  }

  friend ProjectiveAutomorphism operator*(const ProjectiveAutomorphism& a, const ProjectiveAutomorphism& b) {
    if (a.size_ != b.size_) throw std::invalid_argument("automorphism size mismatch");
    if (a.tag_ && b.tag_) {
      unsigned n = static_cast<unsigned>(std::lcm(a.tag_->n, b.tag_->n));
      long sa = n / a.tag_->n, sb = n / b.tag_->n;
      std::vector<int> perm(a.size_);
      std::vector<long> w(a.size_);
      for (std::size_t i = 0; i < a.size_; ++i) {
        auto j = static_cast<std::size_t>(a.tag_->perm[i]);
        perm[i] = b.tag_->perm[j];
        w[i] = a.tag_->weights[i] * sa + b.tag_->weights[j] * sb;
      }
      return monomial(std::move(perm), n, std::move(w));
    }
    return from_matrix(matmul(a.matrix(), b.matrix()));
  }

  ProjectiveAutomorphism inverse() const {
    if (tag_) {
      std::vector<int> perm(size_);
      std::vector<long> w(size_);
      for (std::size_t i = 0; i < size_; ++i) {
        auto j = static_cast<std::size_t>(tag_->perm[i]);
        perm[j] = static_cast<int>(i);
        w[j] = -tag_->weights[i];
      }
      return monomial(std::move(perm), tag_->n, std::move(w));
    }
    return from_matrix(matrix_inverse(matrix_));
  }

  ProjectiveAutomorphism pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    ProjectiveAutomorphism result = identity_like();
    ProjectiveAutomorphism base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// True when the matrix is a nonzero scalar multiple of the identity.
  bool is_scalar() const {
    if (tag_) {
      if (!tag_->is_diagonal()) return false;
      for (auto w : tag_->weights)
        if (w != tag_->weights[0]) return false;
      return true;
    }
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) {
        if (i != j && !is_zero(matrix_[i][j])) return false;
        if (i == j && !(matrix_[i][i] == matrix_[0][0])) return false;
      }
    return true;
  }

  /// Matrix divided by its first nonzero entry in row-major order.
  Matrix<Cyclotomic> normalized_matrix() const {
    Matrix<Cyclotomic> m = matrix();
    Cyclotomic lead;
    bool found = false;
    for (const auto& row : m) {
      for (const auto& x : row)
        if (!is_zero(x)) {
          lead = x;
          found = true;
          break;
        }
      if (found) break;
    }
    Cyclotomic inv = lead.inverse();
    for (auto& row : m)
      for (auto& x : row)
        if (!is_zero(x)) x = x * inv;
    return m;
  }

  /// Same automorphism with every matrix entry written in Q(zeta_order).
  ProjectiveAutomorphism embedded(unsigned order) const {
    if (tag_) return *this;
    Matrix<Cyclotomic> m = matrix_;
    for (auto& row : m)
      for (auto& x : row) x = x.embed(order);
    ProjectiveAutomorphism a = from_matrix(std::move(m), label);
    return a;
  }

  /// lcm of the orders of the matrix entries.
  unsigned entry_order() const {
    if (tag_) return tag_->n;
    unsigned o = 1;
    for (const auto& row : matrix_)
      for (const auto& x : row) o = std::lcm(o, x.order());
    return o;
  }

  std::string to_string() const {
    if (tag_) {
      std::string out = "[";
      for (std::size_t i = 0; i < size_; ++i) {
        if (i) out += ", ";
        long w = tag_->weights[i];
        if (w != 0) out += "zeta(" + std::to_string(tag_->n) + ")" + (w > 1 ? "^" + std::to_string(w) : "") + "*";
        out += "x" + std::to_string(tag_->perm[i]);
      }
      return out + "]";
    }
    std::string out = "[";
    for (std::size_t i = 0; i < size_; ++i) {
      if (i) out += "; ";
      for (std::size_t j = 0; j < size_; ++j) {
        if (j) out += ", ";
        out += matrix_[i][j].to_string();
      }
    }
    return out + "]";
  }

  std::string label;

  static int permutation_sign(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) sign = -sign;
    }
    return sign;
  }

 private:
  ProjectiveAutomorphism identity_like() const {
    if (tag_) return diagonal(tag_->n, std::vector<long>(size_, 0));
    return from_matrix(identity_matrix<Cyclotomic>(size_));
  }

  std::size_t size_ = 0;
  Matrix<Cyclotomic> matrix_;
  std::optional<MonomialTag> tag_;
};

/// Least k >= 1 with M^k scalar.
inline unsigned order_in_pgl(const ProjectiveAutomorphism& m, unsigned cap = 1000) {
  ProjectiveAutomorphism p = m;
  for (unsigned k = 1; k <= cap; ++k) {
    if (p.is_scalar()) return k;
    p = p * m;
  }
  throw std::runtime_error("projective order exceeds cap " + std::to_string(cap));
}

/// F(M x).
inline CycPoly apply(const CycPoly& f, const ProjectiveAutomorphism& m) {
  if (f.nvars() != m.size()) throw std::invalid_argument("automorphism size does not match variable count");
  if (!m.tag()) return substitute_linear(f, m.matrix());
  const auto& t = *m.tag();
  CycPoly out(f.nvars());
  for (const auto& [mono, c] : f.terms()) {
    std::vector<int> e(f.nvars(), 0);
    long w = 0;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      e[static_cast<std::size_t>(t.perm[i])] += mono[i];
      w += mono[i] * t.weights[i];
    }
    out.add_term(Monomial(std::move(e)), c * Cyclotomic::zeta(t.n, w));
  }
  return out;
}

/// lambda with F(M x) = lambda F(x), if one exists.
inline std::optional<Cyclotomic> semi_invariance(const CycPoly& f, const ProjectiveAutomorphism& m) {
  if (f.is_zero()) throw std::invalid_argument("semi-invariance of the zero polynomial");
  CycPoly g = apply(f, m);
  if (g.size() != f.size()) return std::nullopt;
  const auto& [m0, c0] = *f.terms().begin();
  Cyclotomic lambda = g.coefficient(m0) / c0;
  if (is_zero(lambda)) return std::nullopt;
  auto it = g.terms().begin();
  for (const auto& [mono, c] : f.terms()) {
    if (!(it->first == mono) || !(it->second == lambda * c)) return std::nullopt;
    ++it;
  }
  return lambda;
}

/// det(M) == lambda^2, the action on the residue form being det(M) / lambda^2.
inline bool is_symplectic(const CycPoly& f, const ProjectiveAutomorphism& m) {
  auto lambda = semi_invariance(f, m);
  if (!lambda) throw std::invalid_argument("polynomial is not semi-invariant under the automorphism");
  return m.determinant_value() == (*lambda) * (*lambda);
}

}  // namespace cubicfold
