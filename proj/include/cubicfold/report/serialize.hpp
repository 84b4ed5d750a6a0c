#pragma once

#include <json.hpp>
#include <sstream>
#include <string>

#include "cubicfold/report/report.hpp"

namespace cubicfold {

inline nlohmann::ordered_json certificate_json(const SmoothnessCertificate& c, bool timing) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["form_hash"] = c.form_hash;
  j["prime"] = c.prime;
  j["map"] = c.map_summary;
  j["verdict"] = to_string(c.verdict);
  j["points_scanned"] = c.points_scanned;
  if (c.verdict == SmoothVerdict::singular) j["point"] = c.point;
  if (timing) j["wall_ms"] = c.wall_ms;
  return j;
}

/// Deterministic JSON; wall times only with `timing`.
inline nlohmann::ordered_json report_json(const VerificationReport& r, bool timing = false) {
  nlohmann::ordered_json j;
  j["tool"] = "cubicfold";
  j["version"] = r.version;
  j["options"] = {{"seed", r.options.seed},
                  {"as_printed", r.options.as_printed},
                  {"skip", std::vector<std::string>(r.options.skip.begin(), r.options.skip.end())},
                  {"prime", r.options.prime},
                  {"primes", r.options.primes}};
  auto& cat = j["catalog"] = nlohmann::ordered_json::array();
  for (const auto& [name, hash] : r.catalog) cat.push_back({{"name", name}, {"form_hash", hash}});
  auto& claims = j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : r.claims) {
    nlohmann::ordered_json k{{"id", c.id},
                             {"location", c.location},
                             {"expected", c.expected},
                             {"computed", c.computed},
                             {"status", to_string(c.status)},
                             {"notes", c.notes}};
    if (timing) k["wall_ms"] = c.wall_ms;
    claims.push_back(std::move(k));
  }
  auto& certs = j["certificates"] = nlohmann::ordered_json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_json(c, timing));
  j["summary"] = {{"match", r.count(ClaimStatus::match)},
                  {"repaired-match", r.count(ClaimStatus::repaired_match)},
                  {"mismatch", r.count(ClaimStatus::mismatch)},
                  {"unverifiable", r.count(ClaimStatus::unverifiable)}};
  return j;
}

inline std::string report_markdown(const VerificationReport& r, bool timing = false) {
  std::ostringstream out;
  out << "# cubicfold " << r.version << " verification report\n\n";
  out << "seed " << r.options.seed << (r.options.as_printed ? ", as printed" : ", repaired data") << "\n\n";
  out << "| id | location | expected | computed | status | notes |" << (timing ? " ms |" : "") << "\n";
  out << "|---|---|---|---|---|---|" << (timing ? "---|" : "") << "\n";
  auto esc = [](std::string s) {
    std::string o;
    for (char ch : s) o += ch == '|' ? std::string("\\|") : std::string(1, ch);
    return o;
  };
  for (const auto& c : r.claims) {
    out << "| " << c.id << " | " << esc(c.location) << " | " << esc(c.expected) << " | " << esc(c.computed) << " | "
        << to_string(c.status) << " | " << esc(c.notes) << " |";
    if (timing) out << " " << static_cast<long>(c.wall_ms) << " |";
    out << "\n";
  }
  out << "\nmatch " << r.count(ClaimStatus::match) << ", repaired-match " << r.count(ClaimStatus::repaired_match)
      << ", mismatch " << r.count(ClaimStatus::mismatch) << ", unverifiable " << r.count(ClaimStatus::unverifiable) << "\n";
  return out.str();
}

}  // namespace cubicfold
