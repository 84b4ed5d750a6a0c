#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cubicfold/exactnum.hpp"
#include "cubicfold/families/cubic.hpp"

namespace cubicfold {

enum class SmoothVerdict { smooth, singular, inconclusive };

inline std::string to_string(SmoothVerdict v) {
  switch (v) {
    case SmoothVerdict::smooth: return "smooth";
    case SmoothVerdict::singular: return "singular-point-found";
    case SmoothVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct SmoothnessCertificate {
  std::string name;
  std::string form_hash;
  std::uint64_t prime = 0;
  std::string map_summary;
  SmoothVerdict verdict = SmoothVerdict::inconclusive;
  std::vector<std::uint64_t> point;  // set for a singular verdict
  std::uint64_t points_scanned = 0;
  double wall_ms = 0;
};

/// FNV-1a of the printed form.
inline std::string form_hash(const CycPoly& f) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : format_poly(f, default_names(f.nvars()))) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline std::string summarize(const SpecializationMap& s) {
  std::string out = "p=" + std::to_string(s.prime) + ", zeta(" + std::to_string(s.source_order) +
                    ")->" + std::to_string(s.zeta_image);
  for (auto [k, v] : s.surd_images) out += ", sqrt(" + std::to_string(k) + ")->" + std::to_string(v);
  return out;
}

/// Number of points of P^{n-1}(F_p).
inline std::uint64_t projective_point_count(std::size_t n, std::uint64_t p) {
  std::uint64_t total = 0, pk = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += pk;
    pk *= p;
  }
  return total;
}

/// Point budget for exhaustive scans, from CUBICFOLD_BUDGET (default 2e9).
inline std::uint64_t scan_budget() {
  if (const char* env = std::getenv("CUBICFOLD_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env) return v;
  }
  return 2'000'000'000ULL;
}

namespace detail {

struct ModTerm {
  std::uint64_t coef;
  std::vector<int> exps;
};

/// First point (in scan order) of P^{n-1}(F_p) where every polynomial vanishes; polynomials
/// must have degree <= 2 in the last variable. Returns (index, point) or nothing.
inline std::optional<std::pair<std::uint64_t, std::vector<std::uint64_t>>> first_common_zero(
    const std::vector<std::vector<ModTerm>>& polys, std::size_t n, std::uint64_t p, unsigned threads) {
  std::uint64_t offset = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t free_count = n - 1 - k;
    std::uint64_t chart_size = 1;
    for (std::size_t i = 0; i < free_count; ++i) chart_size *= p;
    auto eval_point = [&](const std::vector<std::uint64_t>& x) {
      for (const auto& poly : polys) {
        std::uint64_t acc = 0;
        for (const auto& t : poly) {
          std::uint64_t v = t.coef;
          for (std::size_t i = 0; i < n && v; ++i)
            for (int e = 0; e < t.exps[i]; ++e) v = v * x[i] % p;
          acc = (acc + v) % p;
        }
        if (acc) return false;
      }
      return true;
    };
    if (free_count == 0) {
      std::vector<std::uint64_t> x(n, 0);
      x[k] = 1;
      if (eval_point(x)) return std::make_pair(offset, x);
      offset += 1;
      continue;
    }
    std::size_t inner = n - 1;
    std::uint64_t outer_count = chart_size / p;
    unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(outer_count, 1024))));
    std::vector<std::uint64_t> found(nt, std::numeric_limits<std::uint64_t>::max());
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    auto worker = [&](unsigned id) {
      std::uint64_t lo = outer_count * id / nt, hi = outer_count * (id + 1) / nt;
      std::vector<std::uint64_t> x(n, 0);
      x[k] = 1;
      std::vector<std::uint64_t> a(polys.size()), b(polys.size()), c(polys.size());
      for (std::uint64_t r = lo; r < hi; ++r) {
        if (r * p >= best.load(std::memory_order_relaxed)) return;
        std::uint64_t rr = r;
        for (std::size_t i = inner; i-- > k + 1;) {
          x[i] = rr % p;
          rr /= p;
        }
        // coefficients of 1, t, t^2 in the inner variable
        for (std::size_t j = 0; j < polys.size(); ++j) {
          std::uint64_t sa = 0, sb = 0, sc = 0;
          for (const auto& t : polys[j]) {
            std::uint64_t v = t.coef;
            for (std::size_t i = k; i < inner && v; ++i)
              for (int e = 0; e < t.exps[i]; ++e) v = v * x[i] % p;
            if (!v) continue;
            bool lower_zero = false;
            for (std::size_t i = 0; i < k; ++i) lower_zero = lower_zero || t.exps[i] > 0;
            if (lower_zero) continue;
            int e = t.exps[inner];
            if (e == 0) sa += v;
            else if (e == 1) sb += v;
            else sc += v;
          }
          a[j] = sa % p;
          b[j] = sb % p;
          c[j] = sc % p;
        }
        // Q(t) = a + b t + c t^2 stepped by finite differences
        std::vector<std::uint64_t> val = a, d(polys.size()), c2(polys.size());
        for (std::size_t j = 0; j < polys.size(); ++j) {
          d[j] = (b[j] + c[j]) % p;
          c2[j] = 2 * c[j] % p;
        }
        for (std::uint64_t t = 0; t < p; ++t) {
          bool zero = true;
          for (std::size_t j = 0; j < polys.size() && zero; ++j) zero = val[j] == 0;
          if (zero) {
            std::uint64_t idx = r * p + t;
            found[id] = idx;
            std::uint64_t cur = best.load();
            while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
            }
            return;
          }
          for (std::size_t j = 0; j < polys.size(); ++j) {
            val[j] += d[j];
            if (val[j] >= p) val[j] -= p;
            d[j] += c2[j];
            if (d[j] >= p) d[j] -= p;
          }
        }
      }
    };
    if (nt == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned id = 0; id < nt; ++id) pool.emplace_back(worker, id);
      for (auto& th : pool) th.join();
    }
    std::uint64_t idx = *std::min_element(found.begin(), found.end());
    if (idx != std::numeric_limits<std::uint64_t>::max()) {
      std::vector<std::uint64_t> x(n, 0);
      x[k] = 1;
      std::uint64_t rr = idx;
      for (std::size_t i = n; i-- > k + 1;) {
        x[i] = rr % p;
        rr /= p;
      }
      return std::make_pair(offset + idx, x);
    }
    offset += chart_size;
  }
  return std::nullopt;
}

inline std::vector<ModTerm> reduce_mod(const CycPoly& f, const SpecializationMap& s) {
  std::vector<ModTerm> out;
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t v = s.image(c);
    if (v) out.push_back({v, m.exponents});
  }
  return out;
}

}  // namespace detail

/// Exhaustive check that the partial derivatives of X have no common zero over F_p.
inline SmoothnessCertificate certify_smooth(const CubicFourfold& x, const SpecializationMap& s, unsigned threads = 0) {
  auto start = std::chrono::steady_clock::now();
  const CycPoly& f = x.form;
  if (s.prime <= 3) throw std::invalid_argument("smoothness certificates need p > 3");
  SmoothnessCertificate cert;
  cert.name = x.name;
  cert.form_hash = form_hash(f);
  cert.prime = s.prime;
  cert.map_summary = summarize(s);
  std::size_t n = f.nvars();
  std::uint64_t total = projective_point_count(n, s.prime);
  if (total > scan_budget()) {
    cert.verdict = SmoothVerdict::inconclusive;
    return cert;
  }
  std::vector<std::vector<detail::ModTerm>> partials;
  for (std::size_t i = 0; i < n; ++i) partials.push_back(detail::reduce_mod(f.derivative(i), s));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  auto hit = detail::first_common_zero(partials, n, s.prime, threads);
  if (hit) {
    cert.verdict = SmoothVerdict::singular;
    cert.points_scanned = hit->first + 1;
    cert.point = hit->second;
  } else {
    cert.verdict = SmoothVerdict::smooth;
    cert.points_scanned = total;
  }
  cert.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

/// Certificate at the first valid prime >= p_min for the coefficient field of X.
inline SmoothnessCertificate certify_smooth(const CubicFourfold& x, std::uint64_t p_min = 7, unsigned threads = 0) {
  return certify_smooth(x, find_specialization(x.field_order, x.surds, p_min, 100000), threads);
}

}  // namespace cubicfold
