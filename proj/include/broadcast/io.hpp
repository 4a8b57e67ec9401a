// Copyright 2026 The Broadcast Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BROADCAST_IO_HPP
#define BROADCAST_IO_HPP

// CSV and JSON serialization. Rationals are written as lossless "p/q"
// strings; readers accept "p/q", integers and decimals.

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "broadcast/axioms.hpp"
#include "broadcast/characterize.hpp"
#include "broadcast/error.hpp"
#include "broadcast/problem.hpp"
#include "broadcast/rational.hpp"
#include "broadcast/rules.hpp"

namespace broadcast::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Matrices.

/// n lines of n comma-separated tokens. Blank lines and lines starting with
/// '#' are skipped.
inline Problem read_csv(std::istream& in) {
  Problem::Matrix rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<Rational> row;
    std::stringstream ss(line);
    std::string token;
    while (std::getline(ss, token, ',')) {
      try {
        row.push_back(parse_rational(token));
      } catch (const Error& e) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ", column " +
                                          std::to_string(row.size() + 1) + ": " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return Problem::validate(rows);
}

inline Problem read_csv_string(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in);
}

inline void write_csv(std::ostream& out, const Problem& a) {
  for (Team i = 1; i <= a.size(); ++i) {
    for (Team j = 1; j <= a.size(); ++j) {
      if (j > 1) out << ',';
      out << to_string(a(i, j));
    }
    out << '\n';
  }
}

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(mpz_class(std::to_string(v.get<std::uint64_t>()), 10))
                                  : Rational(mpz_class(std::to_string(v.get<std::int64_t>()), 10));
  }
  if (v.is_number_float()) {
    // Shortest round-trip text of the double, then parsed exactly.
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
  }
  throw Error(Errc::ParseError, "expected a number or rational string, got " + v.dump());
}

inline json to_json(const Problem& a) {
  json rows = json::array();
  for (Team i = 1; i <= a.size(); ++i) {
    json row = json::array();
    for (Team j = 1; j <= a.size(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  json out = json::object();
  if (!a.labels().empty()) out["teams"] = a.labels();
  out["audience"] = std::move(rows);
  return out;
}

/// {"teams": [optional names], "audience": [[...], ...]}
inline Problem problem_from_json(const json& v) {
  if (!v.is_object() || !v.contains("audience") || !v["audience"].is_array()) {
    throw Error(Errc::ParseError, "expected an object with an \"audience\" array");
  }
  Problem::Matrix rows;
  for (const json& row : v["audience"]) {
    if (!row.is_array()) throw Error(Errc::ParseError, "audience rows must be arrays");
    std::vector<Rational> r;
    for (const json& cell : row) r.push_back(rational_from_json(cell));
    rows.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (v.contains("teams")) labels = v["teams"].get<std::vector<std::string>>();
  return Problem::validate(rows, std::move(labels));
}

inline Problem read_json(std::istream& in) {
  json v;
  try {
    v = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return problem_from_json(v);
}

/// Dispatches on the extension: ".json" is JSON, anything else CSV.
inline Problem read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return is_json ? read_json(in) : read_csv(in);
}

// ---------------------------------------------------------------------------
// Results.

inline json to_json(const Allocation& r) {
  json out = json::array();
  for (const Rational& s : r.shares) out.push_back(to_json(s));
  return out;
}

inline Allocation allocation_from_json(const json& v) {
  Allocation out;
  for (const json& s : v) out.shares.push_back(rational_from_json(s));
  return out;
}

inline json to_json(const Permutation& p) { return p.mapping(); }

inline json to_json(const AxiomInstance& inst) {
  json out = json::object();
  out["problem"] = to_json(inst.a);
  if (inst.sigma) out["sigma"] = to_json(*inst.sigma);
  if (inst.b) out["second"] = to_json(*inst.b);
  if (inst.pair) out["pair"] = {inst.pair->first, inst.pair->second};
  if (inst.team) out["team"] = *inst.team;
  return out;
}

inline AxiomInstance instance_from_json(const json& v) {
  AxiomInstance inst{problem_from_json(v.at("problem")), std::nullopt, std::nullopt, std::nullopt,
                     std::nullopt};
  if (v.contains("sigma")) inst.sigma = Permutation(v["sigma"].get<std::vector<Team>>());
  if (v.contains("second")) inst.b = problem_from_json(v["second"]);
  if (v.contains("pair")) inst.pair = std::make_pair(v["pair"][0].get<Team>(), v["pair"][1].get<Team>());
  if (v.contains("team")) inst.team = v["team"].get<Team>();
  return inst;
}

inline json to_json(const AxiomWitness& w) {
  json lhs = json::array();
  json rhs = json::array();
  for (const auto& r : w.lhs) lhs.push_back(to_json(r));
  for (const auto& r : w.rhs) rhs.push_back(to_json(r));
  return json{{"axiom", axiom_name(w.axiom)},
              {"instance", to_json(w.instance)},
              {"lhs", lhs},
              {"relation", w.relation},
              {"rhs", rhs},
              {"description", w.description}};
}

inline json to_json(const GeneratorConfig& c) {
  return json{{"n_min", c.n_min},
              {"n_max", c.n_max},
              {"max_entry", c.max_entry},
              {"sparsity", c.sparsity},
              {"duplication_bias", c.duplication_bias},
              {"trials", c.trials},
              {"permutation_samples", c.permutation_samples}};
}

inline json to_json(const FalsifyResult& r) {
  json out{{"id", axiom_name(r.axiom)},
           {"outcome", r.found() ? "witness" : "no witness"},
           {"trials", r.trials}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

/// {rule, axioms: [{id, outcome, trials, witness?}], seed, config}
inline json to_json(const AuditReport& report) {
  json axioms = json::array();
  for (const auto& r : report.results) axioms.push_back(to_json(r));
  return json{{"rule", report.rule},
              {"axioms", axioms},
              {"seed", report.config.seed},
              {"config", to_json(report.config)}};
}

inline json to_json(const UnitTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) {
    json outsiders = json::object();
    for (const auto& [k, v] : e.outsiders) outsiders[std::to_string(k)] = to_json(v);
    entries.push_back(json{{"home", e.home},
                           {"away", e.away},
                           {"home_share", to_json(e.home_share)},
                           {"away_share", to_json(e.away_share)},
                           {"outsiders", outsiders}});
  }
  return entries;
}

inline json to_json(const Decomposition& d) {
  json out{{"n", d.n}, {"consistent", d.consistent}};
  if (d.consistent) {
    out["x"] = to_json(d.x);
    out["y"] = to_json(d.y);
    out["z"] = to_json(d.z);
  } else {
    out["table"] = to_json(d.table);
  }
  return out;
}

inline json to_json(const FamilyMembership& m) {
  json params = json::object();
  for (const auto& [k, v] : m.params) params[k] = to_json(v);
  return json{{"family", family_title(m.family)}, {"params", params}, {"axioms", m.axioms}};
}

inline json to_json(const std::vector<FamilyMembership>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

}  // namespace broadcast::io

#endif  // BROADCAST_IO_HPP
