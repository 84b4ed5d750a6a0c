// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance <test_properties binary>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "cubicfold/report/report.hpp"

using namespace cubicfold;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

Outcome dimensions() {
  Outcome o;
  auto t0 = Clock::now();
  const std::map<std::string, long> table{{"V1", 8}, {"V2", 2}, {"V3", 8},  {"F5", 4},  {"F7", 2},
                                          {"F11", 0}, {"F6a", 4}, {"F6b", 4}, {"G4", 6}, {"G8", 2}};
  for (const auto& [fam, want] : table) {
    long got = family_spec(fam).moduli_dimension;
    o.check(got == want, fam + " = " + std::to_string(got));
  }
  long id = family_dimension(ProjectiveAutomorphism::diagonal(1, {0, 0, 0, 0, 0, 0}), Cyclotomic(1));
  o.check(id == 20, "identity = " + std::to_string(id));
  double s = seconds_since(t0);
  o.check(s < 10, "took " + std::to_string(s) + " s");
  return o;
}

Outcome symplectic_labels() {
  Outcome o;
  for (const char* name : {"V1", "V2", "V3", "F5", "F7", "Klein", "F6a", "F6b", "G4", "G8", "X12", "X2", "A6pencil"}) {
    auto e = catalog_member(name);
    for (const auto& g : e.generators)
      o.check(is_symplectic(e.cubic.form, g.map), std::string(name) + " " + g.map.label + " not symplectic");
  }
  auto x15 = catalog_member("X15");
  bool order15 = false, tau = false;
  for (const auto& g : x15.generators) {
    unsigned ord = order_in_pgl(g.map);
    bool s = is_symplectic(x15.cubic.form, g.map);
    if (ord == 15) order15 = true, o.check(s, "X15 order 15 generator not symplectic");
    if (g.map.label == "tau") tau = true, o.check(!s, "X15 tau symplectic");
  }
  o.check(order15 && tau, "X15 generators missing");
  return o;
}

Outcome fixed_loci() {
  Outcome o;
  auto locus = [](const char* name) {
    auto e = catalog_member(name);
    return fixed_locus_on_x(e.cubic, e.generators.at(0).map);
  };
  auto v1 = locus("V1");
  o.check(v1.components.size() == 1 && v1.count(FixedKind::surface) == 1, "sigma1: " + v1.shape());
  auto v2 = locus("V2");
  o.check(v2.components.size() == 2 && v2.count(FixedKind::curve) == 2, "sigma2: " + v2.shape());
  auto v3 = locus("V3");
  o.check(v3.count(FixedKind::points) == v3.components.size() && v3.isolated_points() == 9, "sigma3: " + v3.shape());
  auto f5 = locus("F5");
  o.check(f5.count(FixedKind::points) == f5.components.size() && f5.isolated_points() == 7, "phi5: " + f5.shape());
  return o;
}

Outcome smoothness() {
  Outcome o;
  auto run = [&](const CubicFourfold& x, std::uint64_t p_min, bool want_smooth) {
    // first valid prime >= p_min; a singular reduction moves on to the next prime
    std::uint64_t p = p_min;
    for (int attempt = 0; attempt < 4; ++attempt) {
      auto s = find_specialization(x.field_order, x.surds, p, 1'000'000);
      auto t0 = Clock::now();
      auto c = certify_smooth(x, s, 4);
      double secs = seconds_since(t0);
      o.check(secs < 60, x.name + " took " + std::to_string(secs) + " s");
      if (!want_smooth) {
        o.check(c.verdict == SmoothVerdict::singular, x.name + ": " + to_string(c.verdict));
        return;
      }
      if (c.verdict == SmoothVerdict::smooth) return;
      if (c.verdict == SmoothVerdict::inconclusive) break;
      p = s.prime + 1;
    }
    o.check(false, x.name + " not certified smooth");
  };
  run(catalog_member("Fermat").cubic, 7, true);
  run(catalog_member("Klein").cubic, 23, true);
  run(catalog_member("X12").cubic, 13, true);
  run(catalog_member("X15").cubic, 31, true);
  for (const char* fam : {"V1", "V2", "V3", "F5", "F7", "F6a", "F6b", "G4", "G8"}) run(catalog_member(fam).cubic, 7, true);
  run(CubicFourfold::plain("cone", parse_poly("x0^3 + x1^3 + x2^3", default_names(6))), 7, false);
  return o;
}

Outcome planes() {
  Outcome o;
  auto fermat = search_pattern_planes(catalog_member("Fermat").cubic, 3);
  o.check(fermat.size() == 405, "Fermat " + std::to_string(fermat.size()));
  auto clebsch = search_pattern_planes(catalog_member("Clebsch").cubic, 2);
  o.check(clebsch.size() == 105, "Clebsch " + std::to_string(clebsch.size()));
  auto v2 = search_pattern_planes(v2_split_member(), 3);
  bool disjoint = false;
  for (std::size_t i = 0; i < v2.size() && !disjoint; ++i)
    for (std::size_t j = i + 1; j < v2.size() && !disjoint; ++j) disjoint = planes_disjoint(v2[i], v2[j]);
  o.check(disjoint, "no disjoint pair on the V2 split member");
  auto g4 = search_pattern_planes(catalog_member("G4planes").cubic, 6);
  o.check(g4.size() == 3, "G4 sub-family " + std::to_string(g4.size()));
  auto row = [](std::initializer_list<long> v) {
    std::vector<Cyclotomic> out;
    for (long c : v) out.push_back(Cyclotomic(c));
    return out;
  };
  auto g8 = catalog_member("G8planes").cubic;
  std::size_t found = 0;
  for (auto form : {row({1, 0, 0, 0, 0, 0}), row({1, 1, 0, 0, 0, 0}), row({1, -1, 0, 0, 0, 0})})
    found += contains_plane(g8, PlaneInP5::from_equations({form, row({0, 0, 0, 1, 0, 0}), row({0, 0, 0, 0, 1, 0})}, 6));
  o.check(found == 3, "G8 sub-family " + std::to_string(found));
  return o;
}

Outcome ruled_lines() {
  Outcome o;
  auto unit = [](std::size_t i) {
    std::vector<Cyclotomic> v(6, Cyclotomic(0));
    v[i] = Cyclotomic(1);
    return v;
  };
  auto coef = [](const CycPoly& f, const char* m) {
    return f.coefficient(parse_poly(m, default_names(6)).terms().begin()->first);
  };
  auto g4 = catalog_member("G4").cubic;
  auto c4 = ruled_lines_between(g4, {unit(2), unit(3)}, {unit(4), unit(5)});
  std::vector<std::string> n4{"a2", "a3", "b4", "b5"};
  auto q4 = [&](const char* s) { return parse_poly(s, n4); };
  CycPoly want4 = coef(g4.form, "x2*x4^2") * q4("a2*b4^2") + coef(g4.form, "x2*x5^2") * q4("a2*b5^2") +
                  coef(g4.form, "x3*x4^2") * q4("a3*b4^2") + coef(g4.form, "x3*x5^2") * q4("a3*b5^2");
  o.check(c4.u2v.is_zero() && proportional(c4.uv2, want4), "G4 condition differs");
  auto g8 = catalog_member("G8").cubic;
  auto c8 = ruled_lines_between(g8, {unit(2), unit(4)}, {unit(3), unit(5)});
  std::vector<std::string> n8{"a2", "a4", "b3", "b5"};
  CycPoly printed = parse_poly("b3*a4^2 - a2*b5^2", n8);
  o.check(proportional(c8.u2v, printed) || proportional(c8.uv2, printed),
          "G8: u^2v " + format_poly(c8.u2v, n8) + ", uv^2 " + format_poly(c8.uv2, n8) + " vs b3*a4^2 - a2*b5^2");
  return o;
}

Outcome lattice() {
  Outcome o;
  IntegerLattice k({{4, 1, 0}, {1, 4, 0}, {0, 0, 4}});
  o.check(!enumerate_norm_vectors(k, 14).empty(), "no norm 14 vector");
  o.check(enumerate_norm_vectors(k, 13).empty(), "norm 13 vector found");
  o.check(label_discriminant(3, 14, 0).d == 42, "label_discriminant(3, 14, 0) != 42");
  o.check(admissible_discriminants(50) == std::vector<std::int64_t>{14, 26, 38, 42}, "admissible d <= 50");
  std::vector<std::int64_t> fano;
  for (auto [d, n] : fano_special_d(100)) fano.push_back(d);
  o.check(fano == std::vector<std::int64_t>{14, 26, 42, 62, 86}, "fano_special_d(100)");
  o.check(equivariant_pairs(20) == std::vector<EquivariantPair>{{4, 2, 42, 14}, {16, 9, 546, 182}}, "equivariant_pairs(20)");
  return o;
}

Outcome groups() {
  Outcome o;
  auto f5 = catalog_member("F5").generators;
  auto g5 = group_closure({f5[0].map, f5[1].map});
  o.check(g5.order() == 10, "F5 order " + std::to_string(g5.order()));
  o.check(projectively_equal(f5[1].map * f5[0].map * f5[1].map.inverse(), f5[0].map.inverse()), "no dihedral relation");
  auto f7 = catalog_member("F7").generators;
  auto g7 = group_closure({f7[0].map, f7[1].map});
  o.check(g7.order() == 21, "F7 order " + std::to_string(g7.order()));
  auto k = catalog_member("Klein").generators;
  auto g11 = group_closure({k[0].map, k[1].map});
  o.check(g11.order() == 55, "Klein order " + std::to_string(g11.order()));
  for (const auto* g : {&g5, &g7, &g11}) o.check(validate_group_order(*g), "order fails validation");
  if (o.pass) o.detail = "Klein closure has order 55; L2(11) of order 660 not generated";
  return o;
}

Outcome properties(const std::string& binary) {
  Outcome o;
  if (binary.empty()) {
    o.check(false, "no property binary given");
    return o;
  }
  std::string cmd = "\"" + binary + "\" --gtest_brief=1 > /dev/null 2>&1";
  o.check(std::system(cmd.c_str()) == 0, "property suite failed");
  return o;
}

Outcome printed_discrepancies() {
  Outcome o;
  const std::set<std::string> named{"GEN-F7-phi7", "GEN-Klein-tau", "FORM-V3"};
  ReportOptions printed_opts;
  printed_opts.as_printed = true;
  auto printed = verify_all(printed_opts);
  std::set<std::string> mismatched;
  for (const auto& c : printed.claims)
    if (c.status == ClaimStatus::mismatch) mismatched.insert(c.id);
  for (const auto& id : named) o.check(mismatched.count(id), id + " not a mismatch");
  if (mismatched.size() != 3) {
    std::string ids;
    for (const auto& id : mismatched) ids += (ids.empty() ? "" : ",") + id;
    o.check(false, std::to_string(mismatched.size()) + " mismatch records: " + ids);
  }
  auto repaired = verify_all({});
  for (const auto& c : repaired.claims)
    if (named.count(c.id)) o.check(c.status == ClaimStatus::repaired_match, c.id + " is " + to_string(c.status));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string props = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"dimension table", dimensions},
      {"symplecticity labels", symplectic_labels},
      {"fixed loci", fixed_loci},
      {"smoothness certificates", smoothness},
      {"planes", planes},
      {"ruled-line conditions", ruled_lines},
      {"lattice and numerology", lattice},
      {"groups", groups},
      {"property suites", [&] { return properties(props); }},
      {"as-printed discrepancies", printed_discrepancies},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first
              << (o.detail.empty() ? "" : " (" + o.detail + ")") << std::endl;
  }
  return failed ? 1 : 0;
}
