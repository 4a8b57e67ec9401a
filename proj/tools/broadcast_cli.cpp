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

// broadcast: allocate, audit and classify revenue-sharing rules.
//
// Exit codes: 0 success, 1 input or parameter error, 2 a witness or
// difference was found (falsify, compare), 3 inconsistent decomposition.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "broadcast/broadcast.hpp"
#include "broadcast/io.hpp"

namespace {

using namespace broadcast;
using io::json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kFound = 2;
constexpr int kInconsistent = 3;

struct Output {
  std::string format;  // empty: verb default
  std::optional<unsigned> decimals;

  std::string number(const Rational& r) const {
    return decimals ? to_fixed(r, *decimals) : to_decimal(r);
  }
};

using Row = std::vector<std::string>;

/// First column left-aligned, the rest right-aligned, two spaces apart.
void print_table(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto widen = [&](const Row& r) {
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
    }
  };
  widen(header);
  for (const Row& r : rows) widen(r);
  auto emit = [&](const Row& r) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0) line += "  ";
      const std::string pad(width[c] - r[c].size(), ' ');
      line += c == 0 ? r[c] + pad : pad + r[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  emit(header);
  for (const Row& r : rows) emit(r);
}

void print_csv(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
  auto emit = [&](const Row& r) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << r[c];
    out << '\n';
  };
  emit(header);
  for (const Row& r : rows) emit(r);
}

void print_rows(const Output& o, const Row& header, const std::vector<Row>& rows) {
  if (o.format == "csv") {
    print_csv(std::cout, header, rows);
  } else {
    print_table(std::cout, header, rows);
  }
}

Row team_header(const std::string& first, const Problem& a) {
  Row h{first};
  for (Team i = 1; i <= a.size(); ++i) {
    h.push_back(a.labels().empty() ? "Team " + std::to_string(i) : a.labels()[i - 1]);
  }
  return h;
}

Row allocation_row(const Output& o, const std::string& label, const Allocation& r) {
  Row row{label};
  for (const Rational& s : r.shares) row.push_back(o.number(s));
  return row;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BROADCAST_SEED")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const auto v = std::stoull(text, &used, 10);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::ParseError, "BROADCAST_SEED is not an unsigned integer: '" + std::string(env) + "'");
  }
  return 0;
}

struct GeneratorFlags {
  GeneratorConfig cfg;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* app) {
    app->add_option("--trials", cfg.trials, "Number of seeded trials")->capture_default_str();
    app->add_option("--seed", seed, "64-bit seed (falls back to BROADCAST_SEED, then 0)");
    app->add_option("--n-min", cfg.n_min, "Smallest league size")->capture_default_str();
    app->add_option("--n-max", cfg.n_max, "Largest league size")->capture_default_str();
    app->add_option("--max-entry", cfg.max_entry, "Largest generated audience")->capture_default_str();
    app->add_option("--sparsity", cfg.sparsity, "Probability of a zero entry")->capture_default_str();
    app->add_option("--bias", cfg.duplication_bias,
                    "Probability of a structured (hypothesis-meeting) problem")
        ->capture_default_str();
    app->add_option("--threads", cfg.threads, "Worker threads, 0 = all cores")->capture_default_str();
    app->add_option("--permutations", cfg.permutation_samples,
                    "Sampled permutations per anonymity trial when n > 4")
        ->capture_default_str();
  }

  GeneratorConfig resolve() const {
    GeneratorConfig c = cfg;
    c.seed = resolve_seed(seed);
    c.validate();
    return c;
  }
};

std::vector<AxiomId> parse_axiom_list(const std::vector<std::string>& names) {
  std::vector<AxiomId> out;
  for (const auto& name : names) {
    auto id = parse_axiom(name);
    if (!id) throw Error(Errc::ParseError, "unknown axiom '" + name + "'");
    out.push_back(*id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verbs.

int run_allocate(const Output& o, const std::vector<std::string>& rules, const std::string& input) {
  const Problem a = io::read_problem_file(input);
  std::vector<std::pair<RuleSpec, Allocation>> results;
  for (const auto& name : rules) {
    const RuleSpec spec = parse_rule_spec(name);
    results.emplace_back(spec, make_rule(spec, a.size())(a));
  }
  if (o.format == "json") {
    json out = json::array();
    for (const auto& [spec, r] : results) {
      out.push_back(json{{"rule", rule_name(spec)}, {"shares", io::to_json(r)}});
    }
    std::cout << json{{"problem", io::to_json(a)}, {"allocations", out}}.dump(2) << '\n';
    return kOk;
  }
  std::vector<Row> rows;
  for (const auto& [spec, r] : results) rows.push_back(allocation_row(o, rule_label(spec), r));
  print_rows(o, team_header("Rule", a), rows);
  return kOk;
}

void print_witness_text(const AxiomWitness& w) {
  std::cout << "  " << w.description << '\n';
  const AxiomInstance& inst = w.instance;
  if (inst.sigma) {
    std::cout << "  sigma =";
    for (Team t : inst.sigma->mapping()) std::cout << ' ' << t;
    std::cout << '\n';
  }
  std::cout << "  A =\n";
  std::ostringstream m;
  io::write_csv(m, inst.a);
  std::istringstream lines(m.str());
  for (std::string line; std::getline(lines, line);) std::cout << "    " << line << '\n';
  if (inst.b) {
    std::cout << "  B =\n";
    std::ostringstream mb;
    io::write_csv(mb, *inst.b);
    std::istringstream lb(mb.str());
    for (std::string line; std::getline(lb, line);) std::cout << "    " << line << '\n';
  }
}

int run_audit(const Output& o, const std::string& rule_text, const std::vector<std::string>& axiom_names,
              const GeneratorFlags& flags) {
  const Rule rule = parse_rule(rule_text);
  std::vector<AxiomId> axioms = axiom_names.empty()
                                    ? std::vector<AxiomId>(kAllAxioms.begin(), kAllAxioms.end())
                                    : parse_axiom_list(axiom_names);
  const AuditReport report = audit(rule, axioms, flags.resolve());
  if (o.format == "json") {
    std::cout << io::to_json(report).dump(2) << '\n';
    return kOk;
  }
  std::vector<Row> rows;
  for (const auto& r : report.results) {
    rows.push_back({std::string(axiom_name(r.axiom)), r.found() ? "witness" : "pass", r.outcome()});
  }
  std::cout << "rule " << report.rule << ", seed " << report.config.seed << '\n';
  print_rows(o, {"Axiom", "Result", "Detail"}, rows);
  if (o.format != "csv") {
    for (const auto& r : report.results) {
      if (!r.witness) continue;
      std::cout << '\n' << axiom_name(r.axiom) << " witness:\n";
      print_witness_text(*r.witness);
    }
  }
  return kOk;
}

int run_falsify(const Output& o, const std::string& rule_text, const std::string& axiom_text,
                const GeneratorFlags& flags) {
  const Rule rule = parse_rule(rule_text);
  const auto axiom = parse_axiom(axiom_text);
  if (!axiom) throw Error(Errc::ParseError, "unknown axiom '" + axiom_text + "'");
  const GeneratorConfig cfg = flags.resolve();
  const FalsifyResult r = falsify(*axiom, rule, cfg);
  if (o.format == "json" || o.format.empty()) {
    json out{{"rule", rule.name()},
             {"axiom", axiom_name(*axiom)},
             {"outcome", r.found() ? "witness" : "no witness"},
             {"trials", r.trials},
             {"seed", cfg.seed}};
    if (r.witness) out["witness"] = io::to_json(*r.witness);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << rule.name() << ' ' << axiom_name(*axiom) << ": " << r.outcome() << '\n';
    if (r.witness) print_witness_text(*r.witness);
  }
  return r.found() ? kFound : kOk;
}

int run_decompose(const Output& o, const std::string& rule_text, std::size_t n) {
  const Rule rule = parse_rule(rule_text, n);
  const Decomposition d = decompose(rule, n);
  if (o.format == "json") {
    json out = io::to_json(d);
    out["rule"] = rule.name();
    std::cout << out.dump(2) << '\n';
  } else if (d.consistent) {
    print_rows(o, {"Rule", "x'", "y'", "z"},
               {{rule.name(), o.number(d.x), o.number(d.y), o.number(d.z)}});
  } else {
    std::cout << rule.name() << ": unit values differ across pairs\n";
    std::vector<Row> rows;
    for (const auto& e : d.table.entries) {
      Row row{std::to_string(e.home) + "->" + std::to_string(e.away), o.number(e.home_share),
              o.number(e.away_share)};
      std::string others;
      for (const auto& [k, v] : e.outsiders) {
        others += (others.empty() ? "" : " ") + std::to_string(k) + ":" + o.number(v);
      }
      row.push_back(others);
      rows.push_back(std::move(row));
    }
    print_rows(o, {"Game", "Host", "Visitor", "Outsiders"}, rows);
  }
  return d.consistent ? kOk : kInconsistent;
}

std::string params_text(const Output& o, const FamilyMembership& m) {
  std::string out;
  for (const auto& [k, v] : m.params) {
    out += (out.empty() ? "" : ", ") + k + " = " + o.number(v);
  }
  return out;
}

int run_classify(const Output& o, const std::string& x_text, const std::string& y_text, std::size_t n) {
  const Rational x = parse_rational(x_text);
  const Rational y = parse_rational(y_text);
  const auto ms = classify(x, y, n);
  if (o.format == "json") {
    std::cout << json{{"x", io::to_json(x)}, {"y", io::to_json(y)}, {"n", n},
                      {"memberships", io::to_json(ms)}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  std::vector<Row> rows;
  for (const auto& m : ms) {
    rows.push_back({std::string(family_title(m.family)), params_text(o, m), m.axioms});
  }
  print_rows(o, {"Family", "Parameters", "Axioms"}, rows);
  return kOk;
}

int run_compare(const Output& o, const std::vector<std::string>& rules, const GeneratorFlags& flags) {
  if (rules.size() != 2) throw Error(Errc::ParseError, "compare needs exactly two --rule options");
  const Rule r1 = parse_rule(rules[0]);
  const Rule r2 = parse_rule(rules[1]);
  const Equivalence e = equivalent(r1, r2, flags.resolve());
  if (o.format == "json") {
    json out{{"rules", {r1.name(), r2.name()}},
             {"same", e.same},
             {"unit_tables_equal", e.unit_tables_equal},
             {"trials", e.trials}};
    if (e.counterexample) {
      out["counterexample"] = io::to_json(*e.counterexample);
      out["lhs"] = io::to_json(*e.lhs);
      out["rhs"] = io::to_json(*e.rhs);
    }
    std::cout << out.dump(2) << '\n';
  } else if (e.same) {
    std::cout << r1.name() << " and " << r2.name() << ": " << e.outcome()
              << (e.unit_tables_equal ? ", unit values identical" : "") << '\n';
  } else {
    std::cout << r1.name() << " and " << r2.name() << " differ"
              << (e.unit_tables_equal ? "" : " on a unit problem") << '\n';
    print_rows(o, team_header("Rule", *e.counterexample),
               {allocation_row(o, r1.name(), *e.lhs), allocation_row(o, r2.name(), *e.rhs)});
    std::cout << "A =\n";
    io::write_csv(std::cout, *e.counterexample);
  }
  return e.same ? kOk : kFound;
}

/// Three-team worked example: focal, split, general and convex-family rules.
int run_example(const Output& o) {
  const Problem a = Problem::validate({{0, 1200, 1030}, {750, 0, 140}, {630, 210, 0}});
  struct Section {
    std::string title;
    std::string first;
    std::vector<std::string> rules;
    bool lambda_labels;
  };
  const std::vector<Section> sections = {
      {"Focal rules", "Rule", {"uniform", "equal-split", "cd"}, false},
      {"Generalized split rules", "lambda", {"gsplit:0", "gsplit:0.2", "gsplit:1", "gsplit:4"}, true},
      {"General rules", "(x,y,z)", {"general:0.5,0.2,0.1", "general:1,3,-1"}, false},
      {"EC, UC and UE rules", "Rule", {"ec:0.5", "uc:0.5", "ue:0.5"}, false},
  };

  if (o.format == "json") {
    json out{{"problem", io::to_json(a)}, {"total", io::to_json(a.total())}};
    json claims = json::array();
    for (const auto& c : a.claims()) claims.push_back(io::to_json(c));
    out["claims"] = claims;
    json tables = json::array();
    for (const auto& s : sections) {
      json rows = json::array();
      for (const auto& name : s.rules) {
        const RuleSpec spec = parse_rule_spec(name);
        rows.push_back(json{{"rule", rule_name(spec)}, {"shares", io::to_json(make_rule(spec)(a))}});
      }
      tables.push_back(json{{"title", s.title}, {"rows", rows}});
    }
    out["tables"] = tables;
    std::cout << out.dump(2) << '\n';
    return kOk;
  }

  std::cout << "Audience matrix, ||A|| = " << o.number(a.total()) << '\n';
  Row header = team_header("Host", a);
  header.push_back("Claim");
  std::vector<Row> rows;
  for (Team i = 1; i <= a.size(); ++i) {
    Row row{"Team " + std::to_string(i)};
    for (Team j = 1; j <= a.size(); ++j) row.push_back(o.number(a(i, j)));
    row.push_back(o.number(a.claim(i)));
    rows.push_back(std::move(row));
  }
  print_rows(o, header, rows);

  for (const auto& s : sections) {
    std::cout << '\n' << s.title << '\n';
    std::vector<Row> table;
    for (const auto& name : s.rules) {
      const RuleSpec spec = parse_rule_spec(name);
      std::string label = rule_label(spec);
      if (s.lambda_labels) label = o.number(std::get<spec::GeneralizedSplit>(spec).lambda);
      if (const auto* g = std::get_if<spec::General>(&spec)) {
        label = "(" + o.number(g->x) + "," + o.number(g->y) + "," + o.number(g->z) + ")";
      }
      table.push_back(allocation_row(o, label, make_rule(spec)(a)));
    }
    print_rows(o, team_header(s.first, a), table);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Revenue sharing for broadcasting problems"};
  app.require_subcommand(1);

  Output out;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--decimals", out.decimals,
                    "Round to this many places (default: exact decimal or p/q)");
  };

  std::vector<std::string> rules;
  std::string input;
  std::string axiom;
  std::vector<std::string> axioms;
  std::string x_text;
  std::string y_text;
  std::size_t teams = 3;
  GeneratorFlags flags;

  const std::string grammar =
      "Rule: uniform, equal-split, cd, split:l, gsplit:l, general:x,y,z, ec:l, uc:l, ue:l, "
      "ext-ec:x,y, ext-uc:x,y, ext-ue:x,y, ext:x,y, counter:R1..R13 (R8, R10, R11, R13 need "
      "n = 3), counter:T1-WETE, counter:T1-ETE";

  auto* allocate = app.add_subcommand("allocate", "Allocate a problem under one or more rules");
  allocate->add_option("--rule", rules, grammar)->required();
  allocate->add_option("--input", input, "Matrix file (.csv or .json)")->required();
  add_output(allocate);

  auto* audit_cmd = app.add_subcommand("audit", "Search for axiom violations of a rule");
  audit_cmd->add_option("--rule", rules, grammar)->required()->expected(1);
  audit_cmd->add_option("--axioms", axioms, "Axioms to audit (default: all)")->delimiter(',');
  flags.attach(audit_cmd);
  add_output(audit_cmd);

  auto* falsify_cmd = app.add_subcommand("falsify", "Search for a violation of one axiom");
  falsify_cmd->add_option("--rule", rules, grammar)->required()->expected(1);
  falsify_cmd->add_option("--axiom", axiom, "AN, AD, ETE, WETE, SYM, OP, HOP, AOP, NT, ET, MA, WUB, NN")
      ->required();
  flags.attach(falsify_cmd);
  add_output(falsify_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "Unit-problem signature of a rule");
  decompose_cmd->add_option("--rule", rules, grammar)->required()->expected(1);
  decompose_cmd->add_option("--teams", teams, "League size")->capture_default_str();
  add_output(decompose_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Families containing a signature (x', y')");
  classify_cmd->add_option("--x", x_text, "Host share on a unit problem")->required();
  classify_cmd->add_option("--y", y_text, "Visitor share on a unit problem")->required();
  classify_cmd->add_option("--teams", teams, "League size")->capture_default_str();
  add_output(classify_cmd);

  auto* example_cmd = app.add_subcommand("example", "Worked three-team example");
  add_output(example_cmd);

  auto* compare_cmd = app.add_subcommand("compare", "Test two rules for equality");
  compare_cmd->add_option("--rule", rules, grammar)->required()->expected(2);
  flags.attach(compare_cmd);
  add_output(compare_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*allocate) return run_allocate(out, rules, input);
    if (*audit_cmd) return run_audit(out, rules.front(), axioms, flags);
    if (*falsify_cmd) return run_falsify(out, rules.front(), axiom, flags);
    if (*decompose_cmd) return run_decompose(out, rules.front(), teams);
    if (*classify_cmd) return run_classify(out, x_text, y_text, teams);
    if (*example_cmd) return run_example(out);
    if (*compare_cmd) return run_compare(out, rules, flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
