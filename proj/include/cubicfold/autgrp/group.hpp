#pragma once

#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubicfold/autgrp/automorphism.hpp"

namespace cubicfold {

struct AutomorphismGroup {
  std::vector<ProjectiveAutomorphism> generators;
  std::vector<ProjectiveAutomorphism> elements;  // first element is the identity
  std::size_t order() const { return elements.size(); }
};

/// Key of the scalar-normalized matrix with every entry written in Q(zeta_order).
inline std::string projective_key(const ProjectiveAutomorphism& m, unsigned order) {
  std::string key;
  for (const auto& row : m.normalized_matrix()) {
    for (const auto& x : row) {
      if (is_zero(x)) {
        key += "0;";
        continue;
      }
      Cyclotomic e = x.embed(order);
      for (const auto& q : e.coeffs()) {
        key += q.get_str();
        key += ',';
      }
      key += ';';
    }
    key += '|';
  }
  return key;
}

inline unsigned common_order(const std::vector<ProjectiveAutomorphism>& gens) {
  unsigned o = 1;
  for (const auto& g : gens) o = std::lcm(o, g.entry_order());
  return o;
}

/// Equality in PGL.
inline bool projectively_equal(const ProjectiveAutomorphism& a, const ProjectiveAutomorphism& b) {
  unsigned o = std::lcm(a.entry_order(), b.entry_order());
  return projective_key(a, o) == projective_key(b, o);
}

/// Breadth-first closure under right multiplication by generators.
inline AutomorphismGroup group_closure(const std::vector<ProjectiveAutomorphism>& generators, std::size_t cap = 100000) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  if (cap < 1) throw std::invalid_argument("cap must be positive");
  unsigned order = common_order(generators);
  std::size_t n = generators[0].size();
  AutomorphismGroup g;
  g.generators = generators;
  bool all_monomial = true;
  for (const auto& x : generators) all_monomial = all_monomial && x.is_monomial();
  ProjectiveAutomorphism id = all_monomial ? ProjectiveAutomorphism::diagonal(1, std::vector<long>(n, 0))
                                           : ProjectiveAutomorphism::from_matrix(identity_matrix<Cyclotomic>(n));
  std::unordered_map<std::string, std::size_t> seen;
  seen.emplace(projective_key(id, order), 0);
  g.elements.push_back(id);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t k = frontier.front();
    frontier.pop_front();
    for (const auto& gen : generators) {
      ProjectiveAutomorphism prod = g.elements[k] * gen;
      std::string key = projective_key(prod, order);
      if (seen.count(key)) continue;
      if (g.elements.size() >= cap) throw std::runtime_error("group closure exceeded cap " + std::to_string(cap));
      seen.emplace(std::move(key), g.elements.size());
      frontier.push_back(g.elements.size());
      g.elements.push_back(std::move(prod));
    }
  }
  return g;
}

/// |G| = 2^a2 3^a3 5^a5 7^a7 11^a11 with a2 <= 5, a3 <= 7, a5 <= 1, a7 <= 1, a11 <= 1.
inline bool validate_group_order(std::size_t order) {
  if (order == 0) return false;
  const std::pair<std::size_t, int> bounds[] = {{2, 5}, {3, 7}, {5, 1}, {7, 1}, {11, 1}};
  for (auto [p, b] : bounds) {
    int e = 0;
    while (order % p == 0) {
      order /= p;
      ++e;
    }
    if (e > b) return false;
  }
  return order == 1;
}

inline bool validate_group_order(const AutomorphismGroup& g) { return validate_group_order(g.order()); }

}  // namespace cubicfold
