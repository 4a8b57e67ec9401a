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

#ifndef BROADCAST_RULES_HPP
#define BROADCAST_RULES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "broadcast/counterexamples.hpp"
#include "broadcast/error.hpp"
#include "broadcast/families.hpp"
#include "broadcast/problem.hpp"
#include "broadcast/rational.hpp"
#include "broadcast/rule.hpp"

namespace broadcast {

namespace spec {

struct Uniform {};
struct EqualSplit {};
struct ConcedeAndDivide {};
struct Split { Rational lambda; };
struct GeneralizedSplit { Rational lambda; };
struct General { Rational x, y, z; };
struct EC { Rational lambda; };
struct UC { Rational lambda; };
struct UE { Rational lambda; };
struct ExtendedEC { Rational x, y; };
struct ExtendedUC { Rational x, y; };
struct ExtendedUE { Rational x, y; };
struct Counterexample { CounterexampleId id; };
/// Unit values (x', y', (1 - x' - y')/(n - 2)) extended by additivity.
struct AdditiveExtension { Rational x, y; };

}  // namespace spec

using RuleSpec = std::variant<spec::Uniform, spec::EqualSplit, spec::ConcedeAndDivide, spec::Split,
                              spec::GeneralizedSplit, spec::General, spec::EC, spec::UC, spec::UE,
                              spec::ExtendedEC, spec::ExtendedUC, spec::ExtendedUE,
                              spec::Counterexample, spec::AdditiveExtension>;

/// Mirrors the alternatives of RuleSpec, in order.
enum class Family {
  Uniform,
  EqualSplit,
  ConcedeAndDivide,
  Split,
  GeneralizedSplit,
  General,
  EC,
  UC,
  UE,
  ExtendedEC,
  ExtendedUC,
  ExtendedUE,
  Counterexample,
  AdditiveExtension,
};

inline Family family_of(const RuleSpec& s) { return static_cast<Family>(s.index()); }

/// Grammar keyword of a family ("ext-ec", "gsplit", ...).
inline std::string_view family_keyword(Family f) {
  switch (f) {
    case Family::Uniform: return "uniform";
    case Family::EqualSplit: return "equal-split";
    case Family::ConcedeAndDivide: return "cd";
    case Family::Split: return "split";
    case Family::GeneralizedSplit: return "gsplit";
    case Family::General: return "general";
    case Family::EC: return "ec";
    case Family::UC: return "uc";
    case Family::UE: return "ue";
    case Family::ExtendedEC: return "ext-ec";
    case Family::ExtendedUC: return "ext-uc";
    case Family::ExtendedUE: return "ext-ue";
    case Family::Counterexample: return "counter";
    case Family::AdditiveExtension: return "ext";
  }
  return "?";
}

/// Human-readable family name used in reports.
inline std::string_view family_title(Family f) {
  switch (f) {
    case Family::Uniform: return "uniform";
    case Family::EqualSplit: return "equal-split";
    case Family::ConcedeAndDivide: return "concede-and-divide";
    case Family::Split: return "split";
    case Family::GeneralizedSplit: return "generalized split";
    case Family::General: return "general";
    case Family::EC: return "EC";
    case Family::UC: return "UC";
    case Family::UE: return "UE";
    case Family::ExtendedEC: return "extended EC";
    case Family::ExtendedUC: return "extended UC";
    case Family::ExtendedUE: return "extended UE";
    case Family::Counterexample: return "counterexample";
    case Family::AdditiveExtension: return "additive extension";
  }
  return "?";
}

namespace detail {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline std::string join_params(std::initializer_list<const Rational*> params,
                               std::string (*fmt)(const Rational&)) {
  std::string out;
  for (const Rational* p : params) {
    if (!out.empty()) out += ",";
    out += fmt(*p);
  }
  return out;
}

}  // namespace detail

/// Canonical grammar name; parameters in lossless "p/q" form.
inline std::string rule_name(const RuleSpec& s) {
  const std::string kw(family_keyword(family_of(s)));
  auto fmt = [](const Rational& r) { return to_string(r); };
  return std::visit(
      detail::overloaded{
          [&](const spec::Uniform&) { return kw; },
          [&](const spec::EqualSplit&) { return kw; },
          [&](const spec::ConcedeAndDivide&) { return kw; },
          [&](const spec::Split& p) { return kw + ":" + fmt(p.lambda); },
          [&](const spec::GeneralizedSplit& p) { return kw + ":" + fmt(p.lambda); },
          [&](const spec::General& p) {
            return kw + ":" + fmt(p.x) + "," + fmt(p.y) + "," + fmt(p.z);
          },
          [&](const spec::EC& p) { return kw + ":" + fmt(p.lambda); },
          [&](const spec::UC& p) { return kw + ":" + fmt(p.lambda); },
          [&](const spec::UE& p) { return kw + ":" + fmt(p.lambda); },
          [&](const spec::ExtendedEC& p) { return kw + ":" + fmt(p.x) + "," + fmt(p.y); },
          [&](const spec::ExtendedUC& p) { return kw + ":" + fmt(p.x) + "," + fmt(p.y); },
          [&](const spec::ExtendedUE& p) { return kw + ":" + fmt(p.x) + "," + fmt(p.y); },
          [&](const spec::Counterexample& p) {
            return kw + ":" + std::string(counterexample_name(p.id));
          },
          [&](const spec::AdditiveExtension& p) { return kw + ":" + fmt(p.x) + "," + fmt(p.y); },
      },
      s);
}

/// Short label for tables: "CD", "EC^0.5", "G^(0.5,0.2,0.1)".
inline std::string rule_label(const RuleSpec& s) {
  auto d = [](const Rational& r) { return to_decimal(r); };
  return std::visit(
      detail::overloaded{
          [&](const spec::Uniform&) -> std::string { return "U"; },
          [&](const spec::EqualSplit&) -> std::string { return "ES"; },
          [&](const spec::ConcedeAndDivide&) -> std::string { return "CD"; },
          [&](const spec::Split& p) { return "S^" + d(p.lambda); },
          [&](const spec::GeneralizedSplit& p) { return "S^" + d(p.lambda); },
          [&](const spec::General& p) {
            return "G^(" + d(p.x) + "," + d(p.y) + "," + d(p.z) + ")";
          },
          [&](const spec::EC& p) { return "EC^" + d(p.lambda); },
          [&](const spec::UC& p) { return "UC^" + d(p.lambda); },
          [&](const spec::UE& p) { return "UE^" + d(p.lambda); },
          [&](const spec::ExtendedEC& p) { return "EC^(" + d(p.x) + "," + d(p.y) + ")"; },
          [&](const spec::ExtendedUC& p) { return "UC^(" + d(p.x) + "," + d(p.y) + ")"; },
          [&](const spec::ExtendedUE& p) { return "UE^(" + d(p.x) + "," + d(p.y) + ")"; },
          [&](const spec::Counterexample& p) { return std::string(counterexample_name(p.id)); },
          [&](const spec::AdditiveExtension& p) { return "X^(" + d(p.x) + "," + d(p.y) + ")"; },
      },
      s);
}

/// Validates the parameters a family declares. Bounds that depend on the
/// league size are checked only when `n` is given; evaluation re-checks them
/// against the problem at hand.
inline void validate_spec(const RuleSpec& s, std::optional<std::size_t> n = std::nullopt) {
  if (n && *n < 3) throw Error(Errc::TooFewTeams, "n = " + std::to_string(*n));
  std::visit(detail::overloaded{
                 [](const spec::Split& p) { family::check_unit_interval(p.lambda, "split"); },
                 [](const spec::EC& p) { family::check_unit_interval(p.lambda, "ec"); },
                 [](const spec::UC& p) { family::check_unit_interval(p.lambda, "uc"); },
                 [](const spec::UE& p) { family::check_unit_interval(p.lambda, "ue"); },
                 [&](const spec::General& p) {
                   if (n) family::check_general(p.x, p.y, p.z, *n);
                 },
                 [](const spec::ExtendedEC& p) { family::check_extended_ec(p.x, p.y); },
                 [&](const spec::ExtendedUC& p) {
                   family::check_extended_shape(p.x, p.y, "ext-uc");
                   if (n) family::check_extended_uc(p.x, p.y, *n);
                 },
                 [&](const spec::ExtendedUE& p) {
                   family::check_extended_shape(p.x, p.y, "ext-ue");
                   if (n) family::check_extended_ue(p.x, p.y, *n);
                 },
                 [&](const spec::Counterexample& p) {
                   const auto fixed = counterexample_fixed_size(p.id);
                   if (n && fixed && *fixed != *n) {
                     throw Error(Errc::FixedSizeMismatch,
                                 std::string(counterexample_name(p.id)) + " needs n = " +
                                     std::to_string(*fixed));
                   }
                 },
                 [](const auto&) {},
             },
             s);
}

inline Rule make_rule(const RuleSpec& s, std::optional<std::size_t> n = std::nullopt) {
  validate_spec(s, n);
  const std::string name = rule_name(s);
  return std::visit(
      detail::overloaded{
          [&](const spec::Uniform&) { return Rule(name, family::uniform); },
          [&](const spec::EqualSplit&) { return Rule(name, family::equal_split); },
          [&](const spec::ConcedeAndDivide&) { return Rule(name, family::concede_and_divide); },
          [&](const spec::Split& p) {
            return Rule(name, [l = p.lambda](const Problem& a) { return family::split(a, l); });
          },
          [&](const spec::GeneralizedSplit& p) {
            return Rule(name, [l = p.lambda](const Problem& a) { return family::split(a, l); });
          },
          [&](const spec::General& p) {
            return Rule(name, [p](const Problem& a) { return family::general(a, p.x, p.y, p.z); });
          },
          [&](const spec::EC& p) {
            return Rule(name, [l = p.lambda](const Problem& a) { return family::ec(a, l); });
          },
          [&](const spec::UC& p) {
            return Rule(name, [l = p.lambda](const Problem& a) { return family::uc(a, l); });
          },
          [&](const spec::UE& p) {
            return Rule(name, [l = p.lambda](const Problem& a) { return family::ue(a, l); });
          },
          [&](const spec::ExtendedEC& p) {
            return Rule(name, [p](const Problem& a) { return family::extended_ec(a, p.x, p.y); });
          },
          [&](const spec::ExtendedUC& p) {
            return Rule(name, [p](const Problem& a) { return family::extended_uc(a, p.x, p.y); });
          },
          [&](const spec::ExtendedUE& p) {
            return Rule(name, [p](const Problem& a) { return family::extended_ue(a, p.x, p.y); });
          },
          [&](const spec::Counterexample& p) { return make_counterexample(p.id); },
          [&](const spec::AdditiveExtension& p) {
            return Rule(name, [p](const Problem& a) {
              return family::additive_extension(a, p.x, p.y);
            });
          },
      },
      s);
}

namespace detail {

inline std::vector<Rational> parse_params(std::string_view text, std::size_t expected,
                                          std::string_view whole) {
  std::vector<Rational> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.size() != expected) {
    throw Error(Errc::UnknownRule, "'" + std::string(whole) + "' expects " +
                                       std::to_string(expected) + " parameter(s)");
  }
  return out;
}

}  // namespace detail

/// Parses the rule grammar: "uniform", "equal-split", "cd", "split:l",
/// "gsplit:l", "general:x,y,z", "ec:l", "uc:l", "ue:l", "ext-ec:x,y",
/// "ext-uc:x,y", "ext-ue:x,y", "ext:x,y", "counter:R1".."counter:R13",
/// "counter:T1-WETE", "counter:T1-ETE". Parameters are decimals or p/q.
inline RuleSpec parse_rule_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kw = text.substr(0, colon);
  const std::string_view args =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto params = [&](std::size_t k) {
    if (colon == std::string_view::npos) {
      throw Error(Errc::UnknownRule, "'" + std::string(text) + "' needs parameters");
    }
    return detail::parse_params(args, k, text);
  };
  auto no_params = [&] {
    if (colon != std::string_view::npos) {
      throw Error(Errc::UnknownRule, "'" + std::string(kw) + "' takes no parameters");
    }
  };

  if (kw == "uniform") { no_params(); return spec::Uniform{}; }
  if (kw == "equal-split") { no_params(); return spec::EqualSplit{}; }
  if (kw == "cd") { no_params(); return spec::ConcedeAndDivide{}; }
  if (kw == "split") return spec::Split{params(1)[0]};
  if (kw == "gsplit") return spec::GeneralizedSplit{params(1)[0]};
  if (kw == "general") {
    auto p = params(3);
    return spec::General{p[0], p[1], p[2]};
  }
  if (kw == "ec") return spec::EC{params(1)[0]};
  if (kw == "uc") return spec::UC{params(1)[0]};
  if (kw == "ue") return spec::UE{params(1)[0]};
  if (kw == "ext-ec") { auto p = params(2); return spec::ExtendedEC{p[0], p[1]}; }
  if (kw == "ext-uc") { auto p = params(2); return spec::ExtendedUC{p[0], p[1]}; }
  if (kw == "ext-ue") { auto p = params(2); return spec::ExtendedUE{p[0], p[1]}; }
  if (kw == "ext") { auto p = params(2); return spec::AdditiveExtension{p[0], p[1]}; }
  if (kw == "counter") {
    if (auto id = parse_counterexample(args)) return spec::Counterexample{*id};
    throw Error(Errc::UnknownRule, "no counterexample named '" + std::string(args) + "'");
  }
  throw Error(Errc::UnknownRule, "unknown rule '" + std::string(text) + "'");
}

inline Rule parse_rule(std::string_view text, std::optional<std::size_t> n = std::nullopt) {
  return make_rule(parse_rule_spec(text), n);
}

/// Shares of every team on the unit problem 1^{ij}.
struct UnitEntry {
  Team home;
  Team away;
  Rational home_share;
  Rational away_share;
  std::vector<std::pair<Team, Rational>> outsiders;
};

/// The rule evaluated on all n(n-1) unit problems, ordered by (home, away).
struct UnitTable {
  std::size_t n = 0;
  std::vector<UnitEntry> entries;

  friend bool operator==(const UnitTable& a, const UnitTable& b) {
    if (a.n != b.n || a.entries.size() != b.entries.size()) return false;
    for (std::size_t k = 0; k < a.entries.size(); ++k) {
      const auto& x = a.entries[k];
      const auto& y = b.entries[k];
      if (x.home != y.home || x.away != y.away || x.home_share != y.home_share ||
          x.away_share != y.away_share || x.outsiders != y.outsiders) {
        return false;
      }
    }
    return true;
  }
};

inline UnitTable unit_values(const Rule& rule, std::size_t n) {
  if (n < 3) throw Error(Errc::TooFewTeams, "n = " + std::to_string(n));
  UnitTable table{n, {}};
  table.entries.reserve(n * (n - 1));
  for (Team i = 1; i <= n; ++i) {
    for (Team j = 1; j <= n; ++j) {
      if (i == j) continue;
      const Allocation r = rule(unit_problem(n, i, j));
      UnitEntry e{i, j, r(i), r(j), {}};
      for (Team k = 1; k <= n; ++k) {
        if (k != i && k != j) e.outsiders.emplace_back(k, r(k));
      }
      table.entries.push_back(std::move(e));
    }
  }
  return table;
}

}  // namespace broadcast

#endif  // BROADCAST_RULES_HPP
