#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(zeta_n).
 *
 * A value is a coordinate vector over the power basis 1, zeta, ..., zeta^(phi(n)-1)
 * reduced modulo the n-th cyclotomic polynomial. Field data (the polynomial and the
 * reductions of zeta^k) is built once per order and shared by every value.
 *
 * Binary operations accept operands of different orders when one order divides the
 * other; the smaller one is embedded first. Anything else is rejected, so callers fix
 * one ambient order per computation.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicfold/exactnum/arith.hpp"
#include "cubicfold/exactnum/rational.hpp"

namespace cubicfold {

namespace detail {

using IntPoly = std::vector<std::int64_t>;  // ascending coefficients

inline IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
  IntPoly quot(num.size() - den.size() + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    std::int64_t c = num[i + den.size() - 1] / den.back();
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return quot;
}

inline IntPoly cyclotomic_polynomial(unsigned n) {
  IntPoly result(n + 1, 0);
  result[0] = -1;
  result[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) result = poly_divide_exact(result, cyclotomic_polynomial(d));
  return result;
}

}  // namespace detail

/// Per-order field data.
struct CyclotomicField {
  unsigned n = 1;
  unsigned phi = 1;
  detail::IntPoly modulus;                       // Phi_n, monic, degree phi
  std::vector<std::vector<std::int64_t>> power;  // power[k] = zeta^k in the power basis

  explicit CyclotomicField(unsigned order) : n(order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    phi = static_cast<unsigned>(arith::euler_phi(order));
    modulus = detail::cyclotomic_polynomial(order);
    std::size_t table = std::max<std::size_t>(order, 2 * phi);
    power.assign(table, std::vector<std::int64_t>(phi, 0));
    std::vector<std::int64_t> cur(phi, 0);
    cur[0] = 1;
    for (std::size_t k = 0; k < table; ++k) {
      power[k] = cur;
      // multiply by zeta and reduce the degree-phi coefficient
      std::int64_t top = cur[phi - 1];
      for (unsigned i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (unsigned i = 0; i < phi; ++i) cur[i] -= top * modulus[i];
    }
  }

  static const CyclotomicField& get(unsigned order) {
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot) slot = std::make_unique<CyclotomicField>(order);
    return *slot;
  }
};

class Cyclotomic {
 public:
  Cyclotomic() : field_(&CyclotomicField::get(1)), coeffs_(1) {}
  Cyclotomic(long value) : field_(&CyclotomicField::get(1)), coeffs_{Rational(value)} {}
  Cyclotomic(const Rational& value) : field_(&CyclotomicField::get(1)), coeffs_{value} {}

  static Cyclotomic from_coeffs(unsigned n, std::vector<Rational> coeffs) {
    Cyclotomic c;
    c.field_ = &CyclotomicField::get(n);
    if (coeffs.size() != c.field_->phi)
      throw std::invalid_argument("coefficient vector length must equal phi(n)");
    c.coeffs_ = std::move(coeffs);
    return c;
  }

  /// zeta_n^k for any integer k.
  static Cyclotomic zeta(unsigned n, std::int64_t k = 1) {
    const auto& f = CyclotomicField::get(n);
    Cyclotomic c;
    c.field_ = &f;
    const auto& row = f.power[static_cast<std::size_t>(arith::mod_floor(k, n))];
    c.coeffs_.assign(row.begin(), row.end());
    return c;
  }

  static Cyclotomic zero(unsigned n) { return from_coeffs(n, std::vector<Rational>(CyclotomicField::get(n).phi)); }

  unsigned order() const { return field_->n; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const CyclotomicField& field() const { return *field_; }

  bool is_zero() const {
    for (const auto& q : coeffs_)
      if (sgn(q) != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) return false;
    return true;
  }
  const Rational& rational_part() const { return coeffs_[0]; }

  /// Image under zeta_n -> zeta_m^(m/n). Requires n | m.
  Cyclotomic embed(unsigned m) const {
    unsigned n = order();
    if (m == n) return *this;
    if (m == 0 || m % n != 0) throw std::invalid_argument("cyclotomic order does not divide target order");
    const auto& target = CyclotomicField::get(m);
    Cyclotomic out;
    out.field_ = &target;
    out.coeffs_.assign(target.phi, Rational(0));
    unsigned step = m / n;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (sgn(coeffs_[j]) == 0) continue;
      const auto& row = target.power[(j * step) % m];
      for (unsigned i = 0; i < target.phi; ++i)
        if (row[i] != 0) out.coeffs_[i] += coeffs_[j] * row[i];
    }
    return out;
  }

  Cyclotomic operator-() const {
    Cyclotomic out = *this;
    for (auto& q : out.coeffs_) q = -q;
    return out;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() == 1 && b.order() == 1) return Cyclotomic(a.coeffs_[0] * b.coeffs_[0]);
    if (a.is_rational() && a.order() <= b.order() && b.order() % a.order() == 0) return b.scaled(a.coeffs_[0]);
    if (b.is_rational() && b.order() <= a.order() && a.order() % b.order() == 0) return a.scaled(b.coeffs_[0]);
    auto [x, y] = align(a, b);
    const auto& f = *x.field_;
    std::vector<Rational> prod(2 * f.phi - 1);
    for (unsigned i = 0; i < f.phi; ++i) {
      if (sgn(x.coeffs_[i]) == 0) continue;
      for (unsigned j = 0; j < f.phi; ++j) {
        if (sgn(y.coeffs_[j]) == 0) continue;
        prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    Cyclotomic out;
    out.field_ = &f;
    out.coeffs_.assign(prod.begin(), prod.begin() + f.phi);
    for (std::size_t k = f.phi; k < prod.size(); ++k) {
      if (sgn(prod[k]) == 0) continue;
      const auto& row = f.power[k];
      for (unsigned i = 0; i < f.phi; ++i)
        if (row[i] != 0) out.coeffs_[i] += prod[k] * row[i];
    }
    return out;
  }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
    auto [x, y] = align(a, b);
    return x.coeffs_ == y.coeffs_;
  }

  Cyclotomic scaled(const Rational& s) const {
    Cyclotomic out = *this;
    for (auto& q : out.coeffs_) q *= s;
    return out;
  }

  /// Solves (multiplication by this) * x = 1 over Q.
  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("inversion of zero");
    const unsigned phi = field_->phi;
    if (is_rational()) return Cyclotomic(Rational(1 / coeffs_[0])).embed(order());
    // column j of the system = this * zeta^j
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
    for (unsigned j = 0; j < phi; ++j) {
      Cyclotomic col = *this * zeta(order(), j);
      for (unsigned i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
    }
    m[0][phi] = 1;
    for (unsigned c = 0; c < phi; ++c) {
      unsigned piv = c;
      while (sgn(m[piv][c]) == 0) ++piv;
      std::swap(m[piv], m[c]);
      Rational inv = 1 / m[c][c];
      for (unsigned k = c; k <= phi; ++k) m[c][k] *= inv;
      for (unsigned r = 0; r < phi; ++r) {
        if (r == c || sgn(m[r][c]) == 0) continue;
        Rational f = m[r][c];
        for (unsigned k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
      }
    }
    std::vector<Rational> x(phi);
    for (unsigned i = 0; i < phi; ++i) x[i] = m[i][phi];
    return from_coeffs(order(), std::move(x));
  }

  Cyclotomic pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result = Cyclotomic(1).embed(order());
    Cyclotomic base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// Value under zeta_n = exp(2 pi i / n).
  std::complex<double> numeric() const {
    std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / order());
    std::complex<double> acc = 0, zk = 1;
    for (const auto& q : coeffs_) {
      acc += q.get_d() * zk;
      zk *= z;
    }
    return acc;
  }

  /// If this equals zeta_m^k for some k (m = order), returns k.
  std::optional<unsigned> root_of_unity_exponent() const {
    for (unsigned k = 0; k < order(); ++k)
      if (equal_row(field_->power[k])) return k;
    return std::nullopt;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& q = coeffs_[k];
      if (sgn(q) == 0) continue;
      Rational a = abs(q);
      if (first)
        os << (sgn(q) < 0 ? "-" : "");
      else
        os << (sgn(q) < 0 ? " - " : " + ");
      first = false;
      if (k == 0) {
        os << a.get_str();
        continue;
      }
      if (a != 1) os << a.get_str() << "*";
      os << "zeta(" << order() << ")";
      if (k > 1) os << "^" << k;
    }
    return os.str();
  }

 private:
  bool equal_row(const std::vector<std::int64_t>& row) const {
    for (std::size_t i = 0; i < row.size(); ++i)
      if (coeffs_[i] != row[i]) return false;
    return true;
  }

  static std::pair<Cyclotomic, Cyclotomic> align(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = a.order(), n = b.order();
    if (m == n) return {a, b};
    if (n % m == 0) return {a.embed(n), b};
    if (m % n == 0) return {a, b.embed(m)};
    throw std::invalid_argument("incompatible cyclotomic orders " + std::to_string(m) + " and " +
                                std::to_string(n));
  }

  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline Cyclotomic inverse(const Cyclotomic& c) { return c.inverse(); }
inline std::string to_string(const Cyclotomic& c) { return c.to_string(); }

/// Smallest order containing the square root of k (the conductor of Q(sqrt k)).
inline unsigned sqrt_conductor(std::int64_t k) {
  auto [square, core] = arith::squarefree_decompose(k);
  if (core == 0 || core == 1) return 1;
  std::int64_t abs_core = core < 0 ? -core : core;
  bool one_mod_four = arith::mod_floor(core, 4) == 1;
  return static_cast<unsigned>(one_mod_four ? abs_core : 4 * abs_core);
}

/// The square root of k inside Q(zeta_n): the positive real root when k > 0, and
/// i*sqrt(|k|) when k < 0, under zeta_n = exp(2 pi i / n). Requires conductor | n.
inline Cyclotomic cyclotomic_sqrt(std::int64_t k, unsigned n) {
  unsigned cond = sqrt_conductor(k);
  if (n % cond != 0)
    throw std::invalid_argument("sqrt(" + std::to_string(k) + ") does not lie in Q(zeta_" + std::to_string(n) + ")");
  auto [square, core] = arith::squarefree_decompose(k);
  if (core == 0) return Cyclotomic::zero(n);
  // build sqrt(core) in Q(zeta_cond) from Gauss sums, then fix the sign numerically
  Cyclotomic root = Cyclotomic(1).embed(cond);
  std::int64_t remaining = core;
  std::uint64_t abs_core = static_cast<std::uint64_t>(core < 0 ? -core : core);
  for (auto [p, e] : arith::factorize(abs_core)) {
    if (p == 2) continue;
    // g_p = sum (a/p) zeta_p^a satisfies g_p^2 = (-1)^((p-1)/2) p
    Cyclotomic g = Cyclotomic::zero(static_cast<unsigned>(p));
    for (std::uint64_t a = 1; a < p; ++a) {
      bool residue = arith::powmod(a, (p - 1) / 2, p) == 1;
      Cyclotomic z = Cyclotomic::zeta(static_cast<unsigned>(p), static_cast<std::int64_t>(a));
      g = residue ? g + z : g - z;
    }
    root = root * g.embed(cond);
    std::int64_t pstar = (p % 4 == 1) ? static_cast<std::int64_t>(p) : -static_cast<std::int64_t>(p);
    remaining /= pstar;
  }
  // remaining is one of 1, -1, 2, -2
  if (remaining == -1 || remaining == -2) root = root * Cyclotomic::zeta(4).embed(cond);
  if (remaining == 2 || remaining == -2) root = root * (Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7)).embed(cond);
  std::complex<double> v = root.numeric();
  bool flip = (core > 0) ? v.real() < 0 : v.imag() < 0;
  if (flip) root = -root;
  return root.scaled(Rational(square)).embed(n);
}

}  // namespace cubicfold
