#pragma once

#include <cstdint>
#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicfold/autgrp/automorphism.hpp"
#include "cubicfold/cert/smooth.hpp"
#include "cubicfold/families/cubic.hpp"
#include "cubicfold/families/fixed_locus.hpp"
#include "cubicfold/families/invariants.hpp"

namespace cubicfold {

enum class Provenance { as_printed, repaired, constructed };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::as_printed: return "as-printed";
    case Provenance::repaired: return "repaired";
    case Provenance::constructed: return "constructed";
  }
  return "?";
}

struct CatalogGenerator {
  ProjectiveAutomorphism map;
  Provenance provenance = Provenance::as_printed;
  std::optional<ProjectiveAutomorphism> printed;  // the printed map when it differs and is a valid automorphism
  std::string printed_text;                       // printed formula when it differs
  unsigned expected_order = 0;
  std::optional<bool> expected_symplectic;
};

struct CatalogEntry {
  CubicFourfold cubic;
  std::vector<CatalogGenerator> generators;
  std::uint64_t seed = 0;  // seed actually used (after genericity retries)
  std::string note;
};

struct FamilySpec {
  std::string name;
  CatalogGenerator generator;
  Cyclotomic lambda;
  std::vector<Monomial> printed_span;  // monomials of the printed normal form
  std::vector<Monomial> basis;         // invariant monomials of the generator
  long span_dimension = 0;             // projective
  long moduli_dimension = 0;
  std::optional<long> printed_dimension;
};

namespace detail {

inline CycPoly poly6(const std::string& text, std::size_t n = 6) { return parse_poly(text, default_names(n)); }

inline std::vector<Monomial> monomials_of(const std::string& text, std::size_t n = 6) {
  std::vector<Monomial> out;
  CycPoly f = poly6(text, n);
  for (const auto& [m, c] : f.terms()) out.push_back(m);
  return out;
}

inline CatalogGenerator gen(ProjectiveAutomorphism m, unsigned order, std::optional<bool> symplectic,
                            Provenance prov = Provenance::as_printed) {
  return CatalogGenerator{std::move(m), prov, std::nullopt, {}, order, symplectic};
}

inline CatalogGenerator repaired(ProjectiveAutomorphism fixed, std::optional<ProjectiveAutomorphism> printed,
                                 std::string text, unsigned order, bool symplectic) {
  return CatalogGenerator{std::move(fixed), Provenance::repaired, std::move(printed), std::move(text), order, symplectic};
}

/// Sum of the basis monomials with seeded coefficients in {-3..3}\{0}; `fixed` overrides.
inline CycPoly seeded_combination(const std::vector<Monomial>& basis, std::uint64_t seed,
                                  const std::map<std::vector<int>, long>& fixed = {}) {
  static const long values[] = {-3, -2, -1, 1, 2, 3};
  std::mt19937_64 rng(seed);
  CycPoly f(basis.empty() ? 6 : basis[0].nvars());
  for (const auto& m : basis) {
    long c = values[rng() % 6];
    auto it = fixed.find(m.exponents);
    if (it != fixed.end()) c = it->second;
    f.add_term(m, Cyclotomic(c));
  }
  return f;
}

inline bool smooth_at_small_prime(const CubicFourfold& x) {
  for (std::uint64_t p : {7, 11, 13}) {
    auto s = find_specialization(x.field_order, x.surds, p, 10000);
    if (certify_smooth(x, s).verdict == SmoothVerdict::smooth) return true;
  }
  return false;
}

/// (Mx) on the section, for an ambient coordinate permutation (Px)_i = x_{perm[i]}.
inline ProjectiveAutomorphism induced_on_section(const LinearSection& s, const std::vector<std::size_t>& kept,
                                                 const std::vector<int>& perm, std::string label) {
  std::size_t d = kept.size();
  Matrix<Cyclotomic> n(d, std::vector<Cyclotomic>(d, Cyclotomic(0L)));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j < d; ++j) n[r][j] = s.basis[j][static_cast<std::size_t>(perm[kept[r]])];
  return ProjectiveAutomorphism::from_matrix(std::move(n), std::move(label));
}

inline ProjectiveAutomorphism diag(unsigned n, std::vector<long> w, std::string label) {
  return ProjectiveAutomorphism::diagonal(n, std::move(w), std::move(label));
}

inline ProjectiveAutomorphism perm(std::vector<int> p, std::string label) {
  std::vector<long> w(p.size(), 0);
  return ProjectiveAutomorphism::monomial(std::move(p), 1, std::move(w), std::move(label));
}

// printed normal forms
inline const std::map<std::string, std::string>& printed_spans() {
  static const std::map<std::string, std::string> spans = {
      {"V1",
       "x0^3 + x0^2*x1 + x0^2*x2 + x0^2*x3 + x0*x1^2 + x0*x1*x2 + x0*x1*x3 + x0*x2^2 + x0*x2*x3 + x0*x3^2 + x1^3 + "
       "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x1*x3^2 + x2^3 + x2^2*x3 + x2*x3^2 + x3^3 + x4^3 + x5^3 + "
       "x4*x5*x0 + x4*x5*x1 + x4*x5*x2 + x4*x5*x3"},
      {"V2",
       "x0^3 + x0^2*x1 + x0^2*x2 + x0*x1^2 + x0*x1*x2 + x0*x2^2 + x1^3 + x1^2*x2 + x1*x2^2 + x2^3 + "
       "x3^3 + x3^2*x4 + x3^2*x5 + x3*x4^2 + x3*x4*x5 + x3*x5^2 + x4^3 + x4^2*x5 + x4*x5^2 + x5^3"},
      // f(x0,x1) + g(x2,x3) + h(x4,x5) + sum a_ijk x_i x_j x_k, one index from each pair
      {"V3",
       "x0^3 + x0^2*x1 + x0*x1^2 + x1^3 + x2^3 + x2^2*x3 + x2*x3^2 + x3^3 + x4^3 + x4^2*x5 + x4*x5^2 + x5^3 + "
       "x0*x2*x4 + x0*x2*x5 + x0*x3*x4 + x0*x3*x5 + x1*x2*x4 + x1*x2*x5 + x1*x3*x4 + x1*x3*x5"},
      {"F5",
       "x0^3 + x0^2*x1 + x0*x1^2 + x1^3 + x2*x5*x0 + x2*x5*x1 + x3*x4*x0 + x3*x4*x1 + x2^2*x4 + x2*x3^2 + "
       "x3*x5^2 + x4^2*x5"},
      {"F7", "x0^2*x4 + x1^2*x2 + x0*x2^2 + x3^2*x5 + x3*x4^2 + x1*x5^2 + x0*x1*x3 + x2*x4*x5"},
      {"F11", "x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0 + x5^3"},
      {"F6a",
       "x0^2*x2 + x0^2*x3 + x0*x1*x2 + x0*x1*x3 + x1^2*x2 + x1^2*x3 + x2^3 + x2^2*x3 + x2*x3^2 + x2*x4*x5 + "
       "x3^3 + x3*x4*x5 + x4^3 + x5^3"},
      {"F6b",
       "x0^3 + x0*x1^2 + x0*x2*x4 + x0*x2*x5 + x1*x3*x4 + x1*x3*x5 + x2^3 + x2*x3^2 + x4^3 + x4^2*x5 + "
       "x4*x5^2 + x5^3"},
      {"G9a", "x0^2*x1 + x1^2*x2 + x2^2*x0 + x3^2*x4 + x4^2*x5 + x5^2*x3"},
      {"G9b", "x0^2*x1 + x1^2*x2 + x2^2*x0 + x3^2*x4 + x3*x4^2 + x3^3 + x4^3 + x5^3"},
      {"G4",
       "x0*x2^2 + x0*x2*x3 + x0*x3^2 + x1*x2^2 + x1*x2*x3 + x1*x3^2 + x0^3 + x0^2*x1 + x0*x1^2 + x1^3 + "
       "x4*x5*x0 + x4*x5*x1 + x4^2*x2 + x4^2*x3 + x5^2*x2 + x5^2*x3"},
      {"G8", "x0*x2*x3 + x1*x2^2 + x1*x3^2 + x0^3 + x0*x1^2 + x1*x4*x5 + x4^2*x3 + x5^2*x2"},
  };
  return spans;
}

// V3 normal form as printed: f(x1,x2) + g(x2,x3) + h(x4,x5) + mixed terms
inline const char* v3_printed_span() {
  return "x1^3 + x1^2*x2 + x1*x2^2 + x2^3 + x2^2*x3 + x2*x3^2 + x3^3 + x4^3 + x4^2*x5 + x4*x5^2 + x5^3 + "
         "x0*x2*x4 + x0*x2*x5 + x0*x3*x4 + x0*x3*x5 + x1*x2*x4 + x1*x2*x5 + x1*x3*x4 + x1*x3*x5";
}

inline CatalogGenerator family_generator(const std::string& name) {
  if (name == "V1") return gen(diag(3, {0, 0, 0, 0, 1, 2}, "sigma1"), 3, true);
  if (name == "V2") return gen(diag(3, {0, 0, 0, 1, 1, 1}, "sigma2"), 3, true);
  if (name == "V3") return gen(diag(3, {0, 0, 1, 1, 2, 2}, "sigma3"), 3, true);
  if (name == "F5") return gen(diag(5, {0, 0, 1, 2, 3, 4}, "phi5"), 5, true);
  if (name == "F7")
    return repaired(diag(7, {1, 5, 2, 6, 3, 0}, "phi7"), diag(7, {1, 5, 4, 6, 2, 3}, "phi7 (printed)"),
                    "[z x0, z^5 x1, z^4 x2, z^6 x3, z^2 x4, z^3 x5]", 7, true);
  if (name == "F11")
    return repaired(diag(11, {0, 1, 10, 3, 6, 4}, "phi11"), diag(11, {0, 1, 3, 4, 5, 9}, "phi11 (printed)"),
                    "[x0, z x1, z^3 x2, z^4 x3, z^5 x4, z^9 x5]", 11, true);
  if (name == "F6a")
    return repaired(diag(6, {3, 3, 0, 0, 2, 4}, "sigma6"), diag(6, {3, 3, 0, 0, 2, 2}, "sigma6 (printed)"),
                    "[z^3 x0, z^3 x1, x2, x3, z^2 x4, z^2 x5]", 6, true);
  if (name == "F6b") return gen(diag(6, {0, 3, 4, 1, 2, 2}, "sigma6"), 6, true, Provenance::constructed);
  if (name == "G9a") return gen(diag(9, {0, 6, 3, 1, 4, 7}, "g1"), 9, true);
  if (name == "G9b") return gen(diag(9, {0, 3, 6, 1, 1, 4}, "g2"), 9, true);
  if (name == "G4") return gen(diag(4, {0, 0, 2, 2, 1, 3}, "sigma4"), 4, true);
  if (name == "G8")
    return repaired(diag(8, {0, 4, 2, 6, 1, 3}, "sigma8"), diag(8, {0, 4, 2, 6, 1, 5}, "sigma8 (printed)"),
                    "[x0, -x1, z^2 x2, z^6 x3, z x4, z^3 i x5]", 8, true);
  throw std::invalid_argument("unknown family: " + name);
}

inline const std::map<std::string, long>& printed_family_dimensions() {
  static const std::map<std::string, long> dims = {{"V1", 8}, {"V2", 2}, {"V3", 8},  {"F5", 4},  {"F7", 2},
                                                   {"F11", 0}, {"F6a", 4}, {"F6b", 4}, {"G4", 6}, {"G8", 2}};
  return dims;
}

}  // namespace detail

inline std::vector<std::string> family_names() {
  return {"V1", "V2", "V3", "F5", "F7", "F11", "F6a", "F6b", "G9a", "G9b", "G4", "G8"};
}

/// Family data. With as_printed the printed generator replaces a repaired one.
inline FamilySpec family_spec(const std::string& name, bool as_printed = false) {
  FamilySpec s;
  s.name = name;
  s.generator = detail::family_generator(name);
  if (as_printed && s.generator.printed) {
    s.generator.map = *s.generator.printed;
    s.generator.provenance = Provenance::as_printed;
  }
  std::string span = (as_printed && name == "V3") ? detail::v3_printed_span() : detail::printed_spans().at(name);
  s.printed_span = detail::monomials_of(span);
  const auto& t = *s.generator.map.tag();
  // weight class holding most of the printed span
  std::map<long, int> votes;
  for (const auto& m : s.printed_span) ++votes[arith::mod_floor(m.weight(t.weights), t.n)];
  auto best = std::max_element(votes.begin(), votes.end(), [](auto& a, auto& b) { return a.second < b.second; });
  s.lambda = Cyclotomic::zeta(t.n, best->first);
  auto space = invariant_cubic_space(s.generator.map, s.lambda);
  s.basis = space.monomials;
  s.span_dimension = static_cast<long>(s.basis.size()) - 1;
  s.moduli_dimension = s.span_dimension - centralizer_dimension(s.generator.map);
  auto it = detail::printed_family_dimensions().find(name);
  if (it != detail::printed_family_dimensions().end()) s.printed_dimension = it->second;
  return s;
}

inline std::vector<std::string> catalog_names() {
  return {"V1",  "V2",  "V3",  "F5",       "F7",       "Klein",  "F6a",     "F6b",     "G9a",    "G9b",  "X12",
          "X15", "G4",  "G4planes", "G8", "G8planes", "Fermat", "Clebsch", "X2", "A6pencil", "A6K3"};
}

namespace detail {

/// Seeded member on the family's invariant monomials; retries later seeds until smooth
/// (and, when given, the extra check passes).
inline CatalogEntry generic_member(const std::string& catalog_name, const std::string& family, std::uint64_t seed,
                                   const std::map<std::vector<int>, long>& fixed = {},
                                   std::function<bool(const CatalogEntry&)> accept = {}) {
  FamilySpec spec = family_spec(family);
  for (std::uint64_t s = seed; s < seed + 64; ++s) {
    CatalogEntry e{CubicFourfold::plain(catalog_name, seeded_combination(spec.basis, s, fixed)), {spec.generator}, s, {}};
    if (!smooth_at_small_prime(e.cubic)) continue;
    if (accept && !accept(e)) continue;
    return e;
  }
  throw std::runtime_error("no smooth member found for " + catalog_name);
}

inline std::vector<int> mono_exps(const std::string& text) { return poly6(text).terms().begin()->first.exponents; }

inline CatalogEntry build_special(const std::string& name, std::uint64_t seed) {
  if (name == "Klein") {
    CatalogEntry e{CubicFourfold::plain("Klein", poly6(printed_spans().at("F11"))), {}, seed, {}};
    e.generators.push_back(family_generator("F11"));
    e.generators.push_back(repaired(perm({1, 2, 3, 4, 0, 5}, "tau"), std::nullopt, "[x0, x3, x2, x4, x5, x2]", 5, true));
    return e;
  }
  if (name == "F7") {
    static const long values[] = {-3, -2, -1, 1, 2, 3};
    for (std::uint64_t s = seed; s < seed + 64; ++s) {
      std::mt19937_64 rng(s);
      long a = values[rng() % 6], b = values[rng() % 6];
      CycPoly f = poly6("x0^2*x4 + x1^2*x2 + x0*x2^2 + x3^2*x5 + x3*x4^2 + x1*x5^2") + Cyclotomic(a) * poly6("x0*x1*x3") +
                  Cyclotomic(b) * poly6("x2*x4*x5");
      CatalogEntry e{CubicFourfold::plain("F7", f), {family_generator("F7")}, s, {}};
      e.generators.push_back(repaired(perm({1, 3, 5, 0, 2, 4}, "tau"), perm({2, 0, 1, 4, 5, 3}, "tau (printed)"),
                                      "[x2, x0, x1, x4, x5, x3]", 3, true));
      if (smooth_at_small_prime(e.cubic)) return e;
    }
    throw std::runtime_error("no smooth member found for F7");
  }
  if (name == "Fermat") {
    CatalogEntry e{CubicFourfold::plain("Fermat", poly6("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3")), {}, seed, {}};
    e.generators.push_back(gen(perm({1, 2, 3, 4, 5, 0}, "6-cycle"), 6, false));
    e.generators.push_back(gen(perm({1, 0, 2, 3, 4, 5}, "transposition"), 2, false));
    e.generators.push_back(gen(diag(3, {1, 0, 0, 0, 0, 0}, "cube root scaling"), 3, false));
    return e;
  }
  if (name == "X12") {
    CycPoly f = poly6("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3 - 3*(sqrt(3) + 1)*(x0*x1*x2 + x3*x4*x5)");
    CatalogEntry e{CubicFourfold::plain("X12", f, {3}), {}, seed, {}};
    Cyclotomic one(1L), w = Cyclotomic::zeta(3), w2 = Cyclotomic::zeta(3, 2), z = Cyclotomic(0L);
    Matrix<Cyclotomic> m = {{one, one, one, z, z, z}, {one, w, w2, z, z, z}, {one, w2, w, z, z, z},
                            {z, z, z, one, w, w2},    {z, z, z, one, one, one}, {z, z, z, one, w2, w}};
    e.generators.push_back(gen(ProjectiveAutomorphism::from_matrix(m, "order-12 generator"), 12, true,
                               Provenance::constructed));
    return e;
  }
  if (name == "X15") {
    CycPoly amb = poly6("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3 + x6^3 + x7^3", 8);
    std::vector<std::size_t> kept{1, 2, 3, 4, 5, 6};
    LinearSection s = make_linear_section({poly6("x0 + x1 + x2", 8), poly6("x3 + x4 + x5 + x6 + x7", 8)}, 8, kept);
    CatalogEntry e{CubicFourfold::sectioned("X15", amb, s), {}, seed, {}};
    e.generators.push_back(gen(induced_on_section(s, kept, {1, 2, 0, 4, 5, 6, 7, 3}, "order-15 generator"), 15, true));
    e.generators.push_back(gen(diag(3, {1, 1, 0, 0, 0, 0}, "tau"), 3, false));
    return e;
  }
  if (name == "Clebsch") {
    CycPoly amb = poly6("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3 + x6^3", 7);
    std::vector<std::size_t> kept{0, 1, 2, 3, 4, 5};
    LinearSection s = make_linear_section({poly6("x0 + x1 + x2 + x3 + x4 + x5 + x6", 7)}, 7, kept);
    CatalogEntry e{CubicFourfold::sectioned("Clebsch", amb, s), {}, seed, {}};
    e.generators.push_back(gen(induced_on_section(s, kept, {1, 2, 3, 4, 5, 6, 0}, "7-cycle"), 7, true));
    e.generators.push_back(gen(induced_on_section(s, kept, {1, 2, 0, 3, 4, 5, 6}, "3-cycle"), 3, true));
    return e;
  }
  if (name == "X2") {
    CycPoly f = poly6("x0^3 + x1^3 + x2^3 + 12/5*x0*x1*x2 + x0*x3^2 + x1*x4^2 + x2*x5^2 + 4/9*sqrt(15)*x3*x4*x5");
    CatalogEntry e{CubicFourfold::plain("X2", f, {15}), {}, seed, {}};
    e.generators.push_back(gen(diag(6, {0, 2, 4, 3, 2, 1}, "sigma"), 6, true));
    return e;
  }
  if (name == "A6pencil") {
    static const long values[] = {-3, -2, -1, 1, 2, 3};
    std::vector<std::size_t> kept{0, 1, 2, 3, 4, 6};
    LinearSection s = make_linear_section({poly6("x0 + x1 + x2 + x3 + x4 + x5", 7)}, 7, kept);
    for (std::uint64_t sd = seed; sd < seed + 64; ++sd) {
      std::mt19937_64 rng(sd);
      long t = values[rng() % 6];
      CycPoly amb = poly6("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3 + x6*(x0^2 + x1^2 + x2^2 + x3^2 + x4^2 + x5^2)", 7) +
                    Cyclotomic(t) * poly6("x6^3", 7);
      CatalogEntry e{CubicFourfold::sectioned("A6pencil", amb, s), {}, sd, "t = " + std::to_string(t)};
      e.generators.push_back(gen(perm({1, 2, 3, 4, 0, 5}, "5-cycle"), 5, true));
      if (smooth_at_small_prime(e.cubic)) return e;
    }
    throw std::runtime_error("no smooth member found for A6pencil");
  }
  if (name == "A6K3") {
    CycPoly cubic = poly6("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 - (x0 + x1 + x2 + x3 + x4)^3", 5);
    CubicFourfold x;
    x.name = "A6K3";
    x.ambient_vars = 5;
    x.ambient_form = cubic;
    x.form = cubic;
    x.auxiliary.push_back(poly6("x0^2 + x1^2 + x2^2 + x3^2 + x4^2 + (x0 + x1 + x2 + x3 + x4)^2", 5));
    x.check();
    CatalogEntry e{x, {}, seed, "complete intersection of the quadric in auxiliary and the cubic form"};
    e.generators.push_back(gen(perm({1, 2, 3, 4, 0}, "5-cycle"), 5, std::nullopt));
    e.generators.push_back(gen(perm({1, 2, 0, 3, 4}, "3-cycle"), 3, std::nullopt));
    return e;
  }
  if (name == "G4planes") {
    // singular at (0,0,1,-1,0,0) for every choice of the rest
    static const long values[] = {-3, -2, -1, 1, 2, 3};
    std::mt19937_64 rng(seed);
    long c0 = values[rng() % 6], c1 = values[rng() % 6], g = values[rng() % 6], d = values[rng() % 6];
    while (d == g) d = values[rng() % 6];
    while (c1 == -c0) c1 = values[rng() % 6];
    // F(1,-1) != 0, gamma != delta, L1(1,1) != 0; otherwise extra planes appear
    CycPoly f = poly6("(x0 + x1)*(x2 + x3)^2 + x0^3 - x1^3 + x4^2*(x2 + x3)") +
                poly6("x4*x5") * (Cyclotomic(c0) * poly6("x0") + Cyclotomic(c1) * poly6("x1")) +
                poly6("x5^2") * (Cyclotomic(g) * poly6("x2") + Cyclotomic(d) * poly6("x3"));
    return CatalogEntry{CubicFourfold::plain("G4planes", f), {family_generator("G4")}, seed,
                        "N1 = N2 = (x2 + x3)^2, L2 = x2 + x3, F(x0,x1) = x0^3 - x1^3"};
  }
  if (name == "G8planes") {
    // beta = e = 0, a = 1, b = -1; singular at P5 for every choice of the rest
    static const long values[] = {-3, -2, -1, 1, 2, 3};
    std::mt19937_64 rng(seed);
    long alpha = values[rng() % 6], gamma = values[rng() % 6], c = values[rng() % 6], d = values[rng() % 6];
    CycPoly f = Cyclotomic(alpha) * poly6("x0*x2*x3") + Cyclotomic(gamma) * poly6("x1*x3^2") + poly6("x0^3 - x0*x1^2") +
                Cyclotomic(c) * poly6("x1*x4*x5") + Cyclotomic(d) * poly6("x3*x4^2");
    return CatalogEntry{CubicFourfold::plain("G8planes", f), {family_generator("G8")}, seed,
                        "beta = e = 0, F(x0,x1) = x0^3 - x0*x1^2"};
  }
  throw std::invalid_argument("unknown catalog name: " + name);
}

}  // namespace detail

/// Concrete member of a named family or special cubic, with its generators.
inline CatalogEntry catalog_member(const std::string& name, std::uint64_t seed = 0) {
  using detail::mono_exps;
  if (name == "V1") return detail::generic_member(name, "V1", seed, {{mono_exps("x4^3"), 1}, {mono_exps("x5^3"), 1}});
  if (name == "V2") return detail::generic_member(name, "V2", seed);
  if (name == "V3")
    return detail::generic_member(name, "V3", seed, {}, [](const CatalogEntry& e) {
      return fixed_locus_on_x(e.cubic, e.generators[0].map).isolated_points() == 9;
    });
  if (name == "F5") {
    std::map<std::vector<int>, long> fixed;
    for (const char* m : {"x2^2*x4", "x2*x3^2", "x3*x5^2", "x4^2*x5"}) fixed[mono_exps(m)] = 1;
    auto e = detail::generic_member(name, "F5", seed, fixed, [](const CatalogEntry& x) {
      return fixed_locus_on_x(x.cubic, x.generators[0].map).isolated_points() == 7;
    });
    e.generators.push_back(detail::gen(detail::perm({0, 1, 5, 4, 3, 2}, "tau"), 2, true));
    return e;
  }
  for (const char* fam : {"F6a", "F6b", "G9a", "G9b", "G4", "G8"})
    if (name == fam) return detail::generic_member(name, fam, seed);
  return detail::build_special(name, seed);
}

/// Member f(x0,x1,x2) + f(x3,x4,x5) of V2 with a seeded smooth plane cubic f.
inline CubicFourfold v2_split_member(std::uint64_t seed = 0) {
  auto cubics = monomials_of_degree(3, 3);
  for (std::uint64_t s = seed; s < seed + 64; ++s) {
    CycPoly f = detail::seeded_combination(cubics, s);
    std::vector<CycPoly> first, second;
    for (std::size_t i = 0; i < 3; ++i) {
      first.push_back(CycPoly::variable(6, i));
      second.push_back(CycPoly::variable(6, i + 3));
    }
    CubicFourfold x = CubicFourfold::plain("V2split", substitute(f, first, 6) + substitute(f, second, 6));
    if (detail::smooth_at_small_prime(x)) return x;
  }
  throw std::runtime_error("no smooth split member found");
}

}  // namespace cubicfold
