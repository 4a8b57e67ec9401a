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

#ifndef BROADCAST_CHARACTERIZE_HPP
#define BROADCAST_CHARACTERIZE_HPP

// An additive and anonymous rule is pinned down by what it does on a single
// unit problem: x' to the host, y' to the visitor, z to each outsider. This
// header extracts that signature, maps it to the families containing it and
// rebuilds the rule from it.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "broadcast/error.hpp"
#include "broadcast/families.hpp"
#include "broadcast/generator.hpp"
#include "broadcast/problem.hpp"
#include "broadcast/rational.hpp"
#include "broadcast/rule.hpp"
#include "broadcast/rules.hpp"
#include "broadcast/search.hpp"

namespace broadcast {

struct Decomposition {
  std::size_t n = 0;
  Rational x;  // host's share of 1^{ij}
  Rational y;  // visitor's share
  Rational z;  // each outsider's share
  /// Same (x, y, z) on every ordered pair and for every outsider.
  bool consistent = false;
  UnitTable table;
};

/// Reads (x', y', z) off the unit problems. An inconsistent table is
/// reported as such; the triple then holds the values seen on 1^{12}.
inline Decomposition decompose(const Rule& rule, std::size_t n) {
  UnitTable table = unit_values(rule, n);
  const UnitEntry& first = table.entries.front();
  Decomposition d{n, first.home_share, first.away_share, first.outsiders.front().second, true, {}};
  for (const UnitEntry& e : table.entries) {
    if (e.home_share != d.x || e.away_share != d.y) d.consistent = false;
    for (const auto& [k, v] : e.outsiders) {
      if (v != d.z) d.consistent = false;
    }
  }
  d.table = std::move(table);
  return d;
}

struct FamilyMembership {
  Family family;
  /// Derived parameters, e.g. {"lambda", 1/5} or {"x", ...}, {"y", ...}.
  std::vector<std::pair<std::string, Rational>> params;
  /// Axioms characterizing the family (or its oriented sub-family).
  std::string axioms;
};

namespace detail {

inline std::string orientation_axioms(const Rational& xp, const Rational& yp,
                                      const std::string& bound) {
  const std::string order = xp > yp ? "HOP" : xp < yp ? "AOP" : "OP";
  return "AD+AN+" + order + "+" + bound;
}

}  // namespace detail

/// Every family whose closed region contains the signature (x', y') at
/// league size n. Regions overlap, so several memberships are normal.
inline std::vector<FamilyMembership> classify(const Rational& xp, const Rational& yp, std::size_t n) {
  if (n < 3) throw Error(Errc::TooFewTeams, "n = " + std::to_string(n));
  const Rational nn(static_cast<long>(n));
  const Rational z = (1 - xp - yp) / (nn - 2);
  std::vector<FamilyMembership> out;

  out.push_back({Family::General, {{"x", xp - z}, {"y", yp - z}, {"z", z}}, "AD+AN"});
  if (z == 0) {
    out.push_back({Family::GeneralizedSplit, {{"lambda", yp}}, "AD+AN+NT"});
    if (yp >= 0 && yp <= 1) out.push_back({Family::Split, {{"lambda", yp}}, "AD+AN+NT+MA"});
  }
  if (xp == yp) {
    const Rational& t = xp;
    if (t == 1) out.push_back({Family::ConcedeAndDivide, {}, "AD+AN+ET"});
    if (t == 1 / nn) out.push_back({Family::Uniform, {}, "AD+AN+OP+WUB"});
    if (t == Rational(1, 2)) out.push_back({Family::EqualSplit, {}, "AD+AN+OP+MA"});
    if (t >= Rational(1, 2) && t <= 1) {
      out.push_back({Family::EC, {{"lambda", 2 - 2 * t}}, "AD+AN+OP+MA"});
    }
    if (t >= 1 / nn && t <= 1) {
      out.push_back({Family::UC, {{"lambda", nn * (1 - t) / (nn - 1)}}, "AD+AN+OP+WUB"});
    }
    if (t >= 1 / nn && t <= Rational(1, 2)) {
      out.push_back({Family::UE, {{"lambda", nn * (1 - 2 * t) / (nn - 2)}}, "AD+AN+OP+NN"});
    }
  }
  if (family::in_extended_ec(xp, yp)) {
    out.push_back({Family::ExtendedEC, {{"lambda", family::extended_ec_lambda(xp, yp)}},
                   xp == yp ? "AD+AN+MA" : detail::orientation_axioms(xp, yp, "MA")});
  }
  if (family::in_extended_uc(xp, yp, n)) {
    out.push_back({Family::ExtendedUC, {{"lambda", family::extended_uc_lambda(xp, yp, n)}},
                   detail::orientation_axioms(xp, yp, "WUB")});
  }
  if (family::in_extended_ue(xp, yp, n)) {
    out.push_back({Family::ExtendedUE, {{"lambda", family::extended_ue_lambda(xp, yp, n)}},
                   detail::orientation_axioms(xp, yp, "NN")});
  }
  return out;
}

inline bool has_family(const std::vector<FamilyMembership>& ms, Family f) {
  for (const auto& m : ms) {
    if (m.family == f) return true;
  }
  return false;
}

/// The additive rule with unit values (x', y', (1 - x' - y')/(n - 2)),
/// bound to league size n.
inline Rule reconstruct(const Rational& xp, const Rational& yp, std::size_t n) {
  if (n < 3) throw Error(Errc::TooFewTeams, "n = " + std::to_string(n));
  return Rule(rule_name(spec::AdditiveExtension{xp, yp}),
              [xp, yp](const Problem& a) { return family::additive_extension(a, xp, yp); }, n);
}

struct Equivalence {
  bool same = true;
  /// Unit tables agreed at every size compared.
  bool unit_tables_equal = true;
  std::optional<Problem> counterexample;
  std::optional<Allocation> lhs;
  std::optional<Allocation> rhs;
  std::size_t trials = 0;

  std::string outcome() const {
    if (!same) return "differ";
    return "same within " + std::to_string(trials) + " trials";
  }
};

/// Compares unit tables at every size in [n_min, n_max] both rules accept,
/// then cfg.trials seeded random problems.
inline Equivalence equivalent(const Rule& r1, const Rule& r2, const GeneratorConfig& cfg) {
  cfg.validate();
  std::vector<std::size_t> sizes;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    if (r1.accepts(n) && r2.accepts(n)) sizes.push_back(n);
  }
  if (sizes.empty()) {
    throw Error(Errc::FixedSizeMismatch, r1.name() + " and " + r2.name() +
                                             " share no size in the configured range");
  }
  Equivalence out;
  for (std::size_t n : sizes) {
    for (Team i = 1; i <= n && out.same; ++i) {
      for (Team j = 1; j <= n; ++j) {
        if (i == j) continue;
        Problem u = unit_problem(n, i, j);
        Allocation a = r1(u);
        Allocation b = r2(u);
        if (a != b) {
          out.same = false;
          out.unit_tables_equal = false;
          out.counterexample = std::move(u);
          out.lhs = std::move(a);
          out.rhs = std::move(b);
          break;
        }
      }
    }
    if (!out.same) return out;
  }

  struct Hit {
    Problem a;
    Allocation l, r;
  };
  auto hit = first_hit<Hit>(cfg.trials, cfg.threads, [&](std::size_t k) -> std::optional<Hit> {
    Rng rng(trial_seed(cfg.seed, k));
    const std::size_t n = sizes[rng.below(sizes.size())];
    Problem a = random_problem(rng, cfg, n);
    Allocation l = r1(a);
    Allocation r = r2(a);
    if (l == r) return std::nullopt;
    return Hit{std::move(a), std::move(l), std::move(r)};
  });
  out.trials = cfg.trials;
  if (hit.value) {
    out.same = false;
    out.trials = hit.index + 1;
    out.counterexample = std::move(hit.value->a);
    out.lhs = std::move(hit.value->l);
    out.rhs = std::move(hit.value->r);
  }
  return out;
}

}  // namespace broadcast

#endif  // BROADCAST_CHARACTERIZE_HPP
