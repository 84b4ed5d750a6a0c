#pragma once

// Small-integer number theory used across the library.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cubicfold::arith {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return result;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("element not invertible modulo p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

inline std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

/// Smallest generator of the multiplicative group of F_p.
inline std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto fs = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : fs) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

/// Multiplicative order of a modulo p (a nonzero).
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  std::uint64_t order = p - 1;
  for (auto [q, e] : factorize(p - 1)) {
    for (int i = 0; i < e && order % q == 0 && powmod(a, order / q, p) == 1; ++i) order /= q;
  }
  return order;
}

/// Tonelli-Shanks. Returns the smaller of the two roots, or nullopt for a non-residue.
inline std::optional<std::uint64_t> sqrt_mod(std::int64_t value, std::uint64_t p) {
  std::int64_t sp = static_cast<std::int64_t>(p);
  std::uint64_t a = static_cast<std::uint64_t>(((value % sp) + sp) % sp);
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  std::uint64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = static_cast<std::uint64_t>(s);
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a, q, p);
  std::uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

/// Writes n = square^2 * core with core square-free (sign kept on the core).
inline std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t n) {
  if (n == 0) return {0, 0};
  std::int64_t sign = n < 0 ? -1 : 1;
  std::uint64_t m = static_cast<std::uint64_t>(n < 0 ? -n : n);
  std::int64_t square = 1, core = 1;
  for (auto [p, e] : factorize(m)) {
    for (int i = 0; i < e / 2; ++i) square *= static_cast<std::int64_t>(p);
    if (e % 2) core *= static_cast<std::int64_t>(p);
  }
  return {square, sign * core};
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace cubicfold::arith
