#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubicfold/exactnum/arith.hpp"

namespace cubicfold {

/// Special cubic fourfolds of discriminant d exist: d > 6 and d = 0, 2 mod 6.
inline bool hassett_nonempty(std::int64_t d) { return d > 6 && (d % 6 == 0 || d % 6 == 2); }

/// Associated K3 condition on a special discriminant: 4, 9 and odd primes p = 2 mod 3 do not
/// divide d. `literal` also excludes p = 2, which rules out every even d.
inline bool has_associated_k3(std::int64_t d, bool literal = false) {
  if (!hassett_nonempty(d) || d % 4 == 0 || d % 9 == 0) return false;
  for (const auto& [p, e] : arith::factorize(static_cast<std::uint64_t>(d)))
    if ((literal || p != 2) && p % 3 == 2) return false;
  return true;
}

inline std::vector<std::int64_t> admissible_discriminants(std::int64_t n, bool literal = false) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (has_associated_k3(d, literal)) out.push_back(d);
  return out;
}

/// d = 2(n^2 + n + 1), n >= 2, up to N; pairs (d, n).
inline std::vector<std::pair<std::int64_t, std::int64_t>> fano_special_d(std::int64_t limit) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t n = 2;; ++n) {
    std::int64_t d = 2 * (n * n + n + 1);
    if (d > limit) break;
    out.push_back({d, n});
  }
  return out;
}

struct EquivariantPair {
  std::int64_t n, m, source_d, target_d;
  friend bool operator==(const EquivariantPair&, const EquivariantPair&) = default;
};

/// m >= 2 with m^2 + m = k, if any.
inline std::optional<std::int64_t> pronic_root(std::int64_t k) {
  for (std::int64_t m = 2; m * m + m <= k; ++m)
    if (m * m + m == k) return m;
  return std::nullopt;
}

/// n <= n_max with 3 | n^2+n+1 and (n^2+n+1)/3 + 1 = m^2 + m + 2; returns (n, m, 6d, 2d),
/// d = (n^2+n+1)/3.
inline std::vector<EquivariantPair> equivariant_pairs(std::int64_t n_max) {
  std::vector<EquivariantPair> out;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    std::int64_t t = n * n + n + 1;
    if (t % 3) continue;
    std::int64_t d = t / 3;
    if (auto m = pronic_root(d - 1)) out.push_back({n, *m, 6 * d, 2 * d});
  }
  return out;
}

}  // namespace cubicfold
