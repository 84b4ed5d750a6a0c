#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "cubicfold/report/serialize.hpp"

using namespace cubicfold;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::uint64_t prime = 0;
  unsigned threads = 0;
  bool as_printed = false;
  bool timing = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const json& j, const Globals& g) {
  if (g.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // markdown for section reports: one heading per key
  for (const auto& [k, v] : j.items()) {
    std::cout << "## " << k << "\n\n";
    if (v.is_array()) {
      for (const auto& row : v) std::cout << "- " << (row.is_string() ? row.get<std::string>() : row.dump()) << "\n";
    } else {
      std::cout << (v.is_string() ? v.get<std::string>() : v.dump(2)) << "\n";
    }
    std::cout << "\n";
  }
}

std::string family_for(const std::string& name) {
  if (name == "Klein") return "F11";
  for (const auto& f : family_names())
    if (f == name) return f;
  return {};
}

bool is_catalog(const std::string& name) {
  auto names = catalog_names();
  return std::find(names.begin(), names.end(), name) != names.end() || name == "F11";
}

int cmd_verify(const std::string& target, const std::string& skip, unsigned primes, const Globals& g) {
  if (target != "all") throw UsageError("verify supports the target 'all'");
  ReportOptions o;
  o.seed = g.seed;
  o.as_printed = g.as_printed;
  o.prime = g.prime;
  o.threads = g.threads;
  o.primes = primes;
  for (const auto& s : split(skip, ',')) {
    std::string group = s == "smooth" ? "smoothness" : s;
    if (std::find(claim_groups().begin(), claim_groups().end(), group) == claim_groups().end())
      throw UsageError("unknown claim group: " + s);
    o.skip.insert(group);
  }
  auto r = verify_all(o);
  if (g.format == "json")
    std::cout << report_json(r, g.timing).dump(2) << "\n";
  else
    std::cout << report_markdown(r, g.timing);
  return r.exit_code();
}

int cmd_family(const std::string& name, bool dim, bool fixed, bool inv, bool symp, const Globals& g) {
  if (!is_catalog(name)) throw UsageError("unknown family or cubic: " + name);
  std::string entry = name == "F11" ? "Klein" : name;
  std::string fam = family_for(name);
  if (!dim && !fixed && !inv && !symp) dim = fixed = inv = symp = true;
  json j;
  j["name"] = name;
  if (dim) {
    if (fam.empty()) {
      j["dimension"] = "not a family";
    } else {
      auto s = family_spec(fam, g.as_printed);
      j["dimension"] = s.moduli_dimension;
      j["span_dimension"] = s.span_dimension;
      j["centralizer_dimension"] = centralizer_dimension(s.generator.map);
      if (s.printed_dimension) j["printed_dimension"] = *s.printed_dimension;
    }
  }
  auto e = catalog_member(entry, g.seed);
  if (inv && !fam.empty()) {
    auto s = family_spec(fam, g.as_printed);
    std::vector<std::string> monos;
    for (const auto& m : s.basis) {
      CycPoly p(6);
      p.add_term(m, Cyclotomic(1));
      monos.push_back(format_poly(p));
    }
    j["generator"] = s.generator.map.to_string();
    j["lambda"] = s.lambda.to_string();
    j["invariants"] = monos;
  }
  if (inv) j["form"] = format_poly(e.cubic.form);
  if (fixed) {
    const auto& m = e.generators.at(0).map;
    json table = json::array();
    for (const auto& es : fixed_locus_p5(m)) {
      json rows = json::array();
      for (const auto& v : es.basis) {
        json row = json::array();
        for (const auto& x : v) row.push_back(x.to_string());
        rows.push_back(row);
      }
      table.push_back({{"eigenvalue", es.eigenvalue.to_string()}, {"dimension", es.basis.size()}, {"basis", rows}});
    }
    j["eigenspaces"] = table;
    try {
      auto rep = fixed_locus_on_x(e.cubic, m);
      j["fixed_locus_on_x"] = rep.shape();
    } catch (const std::exception& ex) {
      j["fixed_locus_on_x"] = std::string("not computed: ") + ex.what();
    }
  }
  if (symp) {
    json gens = json::array();
    for (const auto& gen : e.generators) {
      auto lam = semi_invariance(e.cubic.form, gen.map);
      gens.push_back({{"label", gen.map.label},
                      {"order", order_in_pgl(gen.map)},
                      {"lambda", lam ? lam->to_string() : "none"},
                      {"symplectic", lam ? is_symplectic(e.cubic.form, gen.map) : false},
                      {"provenance", to_string(gen.provenance)}});
    }
    j["generators"] = gens;
  }
  emit(j, g);
  return 0;
}

int cmd_smooth(const std::string& name, const Globals& g) {
  if (!is_catalog(name)) throw UsageError("unknown cubic: " + name);
  auto e = catalog_member(name == "F11" ? "Klein" : name, g.seed);
  auto c = certify_smooth(e.cubic, g.prime ? g.prime : 7, g.threads);
  emit(certificate_json(c, g.timing), g);
  return c.verdict == SmoothVerdict::smooth ? 0 : 1;
}

int cmd_numerology(long adm, long fano, long eq, const Globals& g) {
  if (adm <= 0 && fano <= 0 && eq <= 0) adm = 50, fano = 100, eq = 20;
  json j;
  if (adm > 0) j["admissible"] = admissible_discriminants(adm);
  if (fano > 0) {
    json rows = json::array();
    for (auto [d, n] : fano_special_d(fano)) rows.push_back({{"d", d}, {"n", n}});
    j["fano_special"] = rows;
  }
  if (eq > 0) {
    json rows = json::array();
    for (const auto& p : equivariant_pairs(eq))
      rows.push_back({{"n", p.n}, {"m", p.m}, {"source_d", p.source_d}, {"target_d", p.target_d}});
    j["equivariant_pairs"] = rows;
  }
  emit(j, g);
  return 0;
}

int cmd_lattice(const std::string& gram, long norm, long bound, const std::string& label, const Globals& g) {
  json j;
  if (!gram.empty()) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : split(gram, ';')) {
      std::vector<std::int64_t> row;
      for (const auto& x : split(r, ',')) row.push_back(std::stoll(x));
      rows.push_back(row);
    }
    IntegerLattice l(rows);
    auto inv = lattice_invariants(l);
    j["rank"] = inv.rank;
    j["determinant"] = inv.determinant.get_str();
    j["positive_definite"] = inv.positive_definite;
    if (norm > 0) j["norm_vectors"] = enumerate_norm_vectors(l, norm, bound);
  }
  if (!label.empty()) {
    auto p = split(label, ',');
    if (p.size() != 3) throw UsageError("--label takes h_self,v_norm,v_dot_h");
    j["discriminant"] = label_discriminant(std::stoll(p[0]), std::stoll(p[1]), std::stoll(p[2])).d;
  }
  if (j.empty()) throw UsageError("lattice needs --gram or --label");
  emit(j, g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of cubic fourfolds with symplectic automorphisms"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for generic family members");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--prime", g.prime, "smallest prime for smoothness certificates");
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
  app.add_flag("--as-printed", g.as_printed, "use printed generators and equations");
  app.add_flag("--timing", g.timing, "include wall times");

  auto* verify = app.add_subcommand("verify", "run the claim suite");
  verify->fallthrough();
  std::string target, skip;
  unsigned primes = 2;
  verify->add_option("target", target, "claim suite (all)")->required();
  verify->add_option("--skip", skip, "comma separated claim groups to skip");
  verify->add_option("--primes", primes, "smooth verdicts wanted per cubic")->check(CLI::Range(1u, 4u));

  auto* family = app.add_subcommand("family", "analyses of a family or catalog cubic");
  family->fallthrough();
  std::string fname;
  bool dim = false, fixed = false, inv = false, symp = false;
  family->add_option("name", fname, "family or catalog name")->required();
  family->add_flag("--dim", dim, "moduli dimension");
  family->add_flag("--fixed-locus", fixed, "eigenspaces and fixed locus on X");
  family->add_flag("--invariants", inv, "invariant monomials");
  family->add_flag("--symplectic", symp, "generators and symplecticity");

  auto* smooth = app.add_subcommand("smooth", "smoothness certificate for a catalog cubic");
  smooth->fallthrough();
  std::string sname;
  smooth->add_option("name", sname, "catalog name")->required();

  auto* numer = app.add_subcommand("numerology", "discriminant tables");
  numer->fallthrough();
  long adm = 0, fano = 0, eq = 0;
  numer->add_option("--admissible", adm, "admissible d up to N");
  numer->add_option("--fano", fano, "d = 2(n^2+n+1) up to N");
  numer->add_option("--equivariant", eq, "equivariant pairs with n up to N");

  auto* lat = app.add_subcommand("lattice", "Gram matrix invariants and norm vectors");
  lat->fallthrough();
  std::string gram, label;
  long norm = 0, bound = 0;
  lat->add_option("--gram", gram, "rows separated by ';', entries by ','");
  lat->add_option("--norm", norm, "enumerate vectors of this norm");
  lat->add_option("--bound", bound, "coordinate box (0 = automatic)");
  lat->add_option("--label", label, "h_self,v_norm,v_dot_h");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (verify->parsed()) return cmd_verify(target, skip, primes, g);
    if (family->parsed()) return cmd_family(fname, dim, fixed, inv, symp, g);
    if (smooth->parsed()) return cmd_smooth(sname, g);
    if (numer->parsed()) return cmd_numerology(adm, fano, eq, g);
    if (lat->parsed()) return cmd_lattice(gram, norm, bound, label, g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
