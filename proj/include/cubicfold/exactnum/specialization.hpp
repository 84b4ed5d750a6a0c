#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicfold/exactnum/arith.hpp"
#include "cubicfold/exactnum/cyclotomic.hpp"
#include "cubicfold/exactnum/prime_field.hpp"

namespace cubicfold {

/// Ring homomorphism Q(zeta_n) -> F_p fixed by the image of zeta_n.
struct SpecializationMap {
  unsigned source_order = 1;
  std::uint64_t prime = 0;
  std::uint64_t zeta_image = 1;
  std::map<std::int64_t, std::uint64_t> surd_images;

  /// Image of an integer-valued rational; throws when p divides the denominator.
  std::uint64_t rational_image(const Rational& q) const {
    Integer den = q.get_den() % prime;
    if (den == 0) throw std::domain_error("denominator divisible by p");
    Integer num = q.get_num() % prime;
    if (num < 0) num += prime;
    auto n = static_cast<std::uint64_t>(num.get_ui());
    auto d = static_cast<std::uint64_t>(den.get_ui());
    return arith::mulmod(n, arith::invmod(d, prime), prime);
  }

  std::uint64_t image(const Cyclotomic& a) const {
    unsigned m = a.order();
    if (source_order % m != 0)
      throw std::invalid_argument("value order " + std::to_string(m) + " does not divide specialization order " +
                                  std::to_string(source_order));
    std::uint64_t z = arith::powmod(zeta_image, source_order / m, prime);
    std::uint64_t acc = 0, zk = 1;
    for (const auto& q : a.coeffs()) {
      if (sgn(q) != 0) acc = (acc + arith::mulmod(rational_image(q), zk, prime)) % prime;
      zk = arith::mulmod(zk, z, prime);
    }
    return acc;
  }

  PrimeFieldElement operator()(const Cyclotomic& a) const {
    return PrimeFieldElement(prime, static_cast<std::int64_t>(image(a)));
  }
};

inline PrimeFieldElement specialize(const Cyclotomic& a, const SpecializationMap& s) { return s(a); }

/// Primitive n-th roots of unity in F_p, ascending. Requires n | p - 1.
inline std::vector<std::uint64_t> primitive_roots_of_unity(unsigned n, std::uint64_t p) {
  std::uint64_t g = arith::primitive_root(p);
  std::uint64_t base = arith::powmod(g, (p - 1) / n, p);
  std::vector<std::uint64_t> out;
  for (unsigned k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) out.push_back(arith::powmod(base, k, p));
  if (n == 1) out = {1};
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest prime p in [max(p_min, 5), p_max] with p = 1 mod n and every surd a nonzero
/// square mod p. The image of zeta_n is chosen so that surds representable in Q(zeta_n)
/// map to the smaller modular square root whenever some primitive root allows it.
inline SpecializationMap find_specialization(unsigned n, const std::set<std::int64_t>& surds, std::uint64_t p_min,
                                             std::uint64_t p_max) {
  if (n == 0) throw std::invalid_argument("order must be positive");
  for (std::uint64_t p = std::max<std::uint64_t>(p_min, 5); p <= p_max; ++p) {
    if (p == 3 || (p - 1) % n != 0 || !arith::is_prime(p)) continue;
    std::map<std::int64_t, std::uint64_t> roots;
    bool ok = true;
    for (auto s : surds) {
      if (arith::mod_floor(s, static_cast<std::int64_t>(p)) == 0) {
        ok = false;
        break;
      }
      auto r = arith::sqrt_mod(s, p);
      if (!r) {
        ok = false;
        break;
      }
      roots[s] = *r;
    }
    if (!ok) continue;

    SpecializationMap map{n, p, 1, roots};
    auto candidates = primitive_roots_of_unity(n, p);
    std::map<std::int64_t, Cyclotomic> models;
    for (auto s : surds)
      if (n % sqrt_conductor(s) == 0) models.emplace(s, cyclotomic_sqrt(s, n));
    map.zeta_image = candidates.front();
    for (auto z : candidates) {
      SpecializationMap trial{n, p, z, roots};
      bool match = true;
      for (const auto& [s, model] : models)
        if (trial.image(model) != roots[s]) match = false;
      if (match) {
        map.zeta_image = z;
        break;
      }
    }
    // keep the surd images consistent with the homomorphism
    for (const auto& [s, model] : models) map.surd_images[s] = map.image(model);
    return map;
  }
  throw std::runtime_error("no suitable prime in [" + std::to_string(p_min) + ", " + std::to_string(p_max) + "]");
}

}  // namespace cubicfold
