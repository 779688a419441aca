#pragma once

// JSON and fixed text renderings of the library's value types, shared by
// the command line front end and the tests.

#include <string>

#include "json.hpp"

#include "permutex/complexity.hpp"
#include "permutex/typek.hpp"

namespace permutex {

// A bare permutation serializes as its rank array; one with an origin wraps
// the ranks so the witnessing window travels along.
inline nlohmann::json to_json(const Subpermutation& p) {
  nlohmann::json ranks = p.ranks();
  if (!p.origin()) return ranks;
  return {{"ranks", std::move(ranks)},
          {"origin", {{"word", p.origin()->word}, {"start", p.origin()->start}}}};
}

inline Subpermutation perm_from_json(const nlohmann::json& j) {
  if (j.is_array()) return Subpermutation(j.get<std::vector<int>>());
  std::optional<Origin> origin;
  if (j.contains("origin"))
    origin = Origin{j.at("origin").at("word").get<std::string>(),
                    j.at("origin").at("start").get<std::size_t>()};
  return Subpermutation(j.at("ranks").get<std::vector<int>>(), std::move(origin));
}

inline nlohmann::json to_json(const VerifyReport& r) {
  return {{"statement", r.statement},
          {"scanned", r.scanned},
          {"violations", r.violations}};
}

inline const char* pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::Identical: return "identical";
    case PairKind::ComplementaryPair: return "complementary-pair";
    case PairKind::UnrelatedSameForm: return "unrelated-same-form";
    case PairKind::DifferentForm: return "different-form";
  }
  return "unknown";
}

inline nlohmann::json to_json(const PairClass& c) {
  nlohmann::json j{{"kind", pair_kind_name(c.kind)}};
  if (c.kind == PairKind::ComplementaryPair) {
    j["k"] = c.k;
    j["eps"] = c.eps;
  }
  return j;
}

inline nlohmann::json to_json(const Census& c) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : c.groups) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& p : g.members) members.push_back(to_json(p));
    groups.push_back({{"form", to_string(g.form)},
                      {"members", std::move(members)},
                      {"classification",
                       g.pair ? to_json(*g.pair)
                              : nlohmann::json{{"kind", "single"}}}});
  }
  nlohmann::json j{{"n", c.n},
                   {"groups", std::move(groups)},
                   {"doubled", c.doubled},
                   {"span_in_stated_domain", c.span_in_stated_domain}};
  j["predicted_type"] =
      c.predicted_k ? nlohmann::json(*c.predicted_k) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const ComplexityReport& r) {
  return {{"n", r.n},
          {"tau",
           {{"brute", r.tau_brute},
            {"recursive", r.tau_recursive},
            {"closed", r.tau_closed}}},
          {"even", r.even_count},
          {"odd", r.odd_count},
          {"rho_prev", r.rho_prev},
          {"rho_2n_minus_1", r.rho_2n_minus_1},
          {"bounds_ok", r.bounds_ok},
          {"stabilized", r.stabilized},
          {"scan_len", r.scan_len},
          {"parity_overlap", r.parity_overlap},
          {"closed_in_stated_domain", r.closed_in_stated_domain}};
}

// One line per form group, "form : [perm] [perm]", larger first rank first.
// The lone length-1 permutation has an empty form and prints bare.
inline std::string census_lines(const Census& c) {
  std::string out;
  for (const auto& g : c.groups) {
    if (c.n == 1) {
      out += g.members.front().text() + "\n";
      continue;
    }
    out += to_string(g.form) + " :";
    for (const auto& p : g.members) out += " " + p.text();
    out += "\n";
  }
  return out;
}

inline std::string csv_header() { return "n,tau_brute,tau_closed,even,odd"; }

inline std::string csv_row(const ComplexityReport& r) {
  return std::to_string(r.n) + "," + std::to_string(r.tau_brute) + "," +
         std::to_string(r.tau_closed) + "," + std::to_string(r.even_count) +
         "," + std::to_string(r.odd_count);
}

inline std::string text_line(const ComplexityReport& r) {
  std::string s = "n=" + std::to_string(r.n) + " tau=" +
                  std::to_string(r.tau_brute) + " (recursive " +
                  std::to_string(r.tau_recursive) + ", closed " +
                  std::to_string(r.tau_closed) + ") even=" +
                  std::to_string(r.even_count) + " odd=" +
                  std::to_string(r.odd_count) + " rho(" +
                  std::to_string(r.n - 1) + ")=" + std::to_string(r.rho_prev) +
                  " rho(" + std::to_string(2 * r.n - 1) + ")=" +
                  std::to_string(r.rho_2n_minus_1);
  s += r.bounds_ok ? " bounds=ok" : " bounds=VIOLATED";
  s += " scan=" + std::to_string(r.scan_len);
  if (r.parity_overlap)
    s += " parity_overlap=" + std::to_string(r.parity_overlap);
  return s;
}

}  // namespace permutex
