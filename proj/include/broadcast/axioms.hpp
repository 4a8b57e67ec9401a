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

#ifndef BROADCAST_AXIOMS_HPP
#define BROADCAST_AXIOMS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "broadcast/error.hpp"
#include "broadcast/generator.hpp"
#include "broadcast/hypotheses.hpp"
#include "broadcast/problem.hpp"
#include "broadcast/rational.hpp"
#include "broadcast/rule.hpp"
#include "broadcast/search.hpp"

namespace broadcast {

enum class AxiomId { AN, AD, ETE, WETE, SYM, OP, HOP, AOP, NT, ET, MA, WUB, NN };

inline constexpr std::array<AxiomId, 13> kAllAxioms = {
    AxiomId::AN,  AxiomId::AD,  AxiomId::ETE, AxiomId::WETE, AxiomId::SYM,
    AxiomId::OP,  AxiomId::HOP, AxiomId::AOP, AxiomId::NT,   AxiomId::ET,
    AxiomId::MA,  AxiomId::WUB, AxiomId::NN,
};

inline std::string_view axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::AN: return "AN";
    case AxiomId::AD: return "AD";
    case AxiomId::ETE: return "ETE";
    case AxiomId::WETE: return "WETE";
    case AxiomId::SYM: return "SYM";
    case AxiomId::OP: return "OP";
    case AxiomId::HOP: return "HOP";
    case AxiomId::AOP: return "AOP";
    case AxiomId::NT: return "NT";
    case AxiomId::ET: return "ET";
    case AxiomId::MA: return "MA";
    case AxiomId::WUB: return "WUB";
    case AxiomId::NN: return "NN";
  }
  return "?";
}

inline std::optional<AxiomId> parse_axiom(std::string_view name) {
  for (auto id : kAllAxioms) {
    if (axiom_name(id) == name) return id;
  }
  return std::nullopt;
}

inline bool is_pairwise(AxiomId id) {
  switch (id) {
    case AxiomId::ETE:
    case AxiomId::WETE:
    case AxiomId::SYM:
    case AxiomId::OP:
    case AxiomId::HOP:
    case AxiomId::AOP:
      return true;
    default:
      return false;
  }
}

inline bool is_team_axiom(AxiomId id) {
  switch (id) {
    case AxiomId::NT:
    case AxiomId::ET:
    case AxiomId::MA:
    case AxiomId::WUB:
    case AxiomId::NN:
      return true;
    default:
      return false;
  }
}

/// Equality axioms compare R_i = R_j; dominance axioms R_i >= R_j.
inline bool is_symmetric_pairwise(AxiomId id) {
  return id == AxiomId::ETE || id == AxiomId::WETE || id == AxiomId::SYM;
}

/// Whether the ordered pair (i, j) meets the hypothesis of a pairwise axiom.
inline bool pair_qualifies(AxiomId axiom, const Problem& a, Team i, Team j) {
  switch (axiom) {
    case AxiomId::ETE: return ete_equal(a, i, j);
    case AxiomId::WETE: return wete_equal(a, i, j);
    case AxiomId::SYM: return sym_equal(a, i, j);
    case AxiomId::OP: return op_dominates(a, i, j);
    case AxiomId::HOP: return hop_dominates(a, i, j);
    case AxiomId::AOP: return aop_dominates(a, i, j);
    default:
      throw Error(Errc::NotPairwiseAxiom, std::string(axiom_name(axiom)));
  }
}

/// Pairs meeting the hypothesis. Equality axioms list each pair once with
/// i < j; dominance axioms list (i, j) meaning i dominates j.
inline std::vector<std::pair<Team, Team>> qualifying_pairs(AxiomId axiom, const Problem& a) {
  if (!is_pairwise(axiom)) throw Error(Errc::NotPairwiseAxiom, std::string(axiom_name(axiom)));
  std::vector<std::pair<Team, Team>> out;
  const bool sym = is_symmetric_pairwise(axiom);
  for (Team i = 1; i <= a.size(); ++i) {
    for (Team j = sym ? i + 1 : 1; j <= a.size(); ++j) {
      if (i != j && pair_qualifies(axiom, a, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

/// Whether team i meets the hypothesis of a one-team axiom.
inline bool team_qualifies(AxiomId axiom, const Problem& a, Team i) {
  switch (axiom) {
    case AxiomId::NT: return is_null_team(a, i);
    case AxiomId::ET: return is_essential_team(a, i);
    case AxiomId::MA:
    case AxiomId::WUB:
    case AxiomId::NN: return true;
    default:
      throw Error(Errc::InvalidInstance, std::string(axiom_name(axiom)) + " is not a team axiom");
  }
}

struct AxiomInstance {
  Problem a;
  std::optional<Permutation> sigma;          // AN
  std::optional<Problem> b;                  // AD
  std::optional<std::pair<Team, Team>> pair;  // pairwise axioms; absent = all qualifying
  std::optional<Team> team;                  // team axioms (AN: failing team); absent = all
};

struct AxiomWitness {
  AxiomId axiom;
  AxiomInstance instance;
  /// Values on the two sides of the violated relation.
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  /// "=", "<=" or ">=": the relation the axiom demands of lhs and rhs.
  std::string relation;
  std::string description;
};

namespace detail {

inline std::string r_of(Team i, std::string_view problem = "A") {
  return "R_" + std::to_string(i) + "(" + std::string(problem) + ")";
}

inline void require_absent(bool present, AxiomId axiom, std::string_view field) {
  if (present) {
    throw Error(Errc::InvalidInstance,
                std::string(axiom_name(axiom)) + " instance must not carry " + std::string(field));
  }
}

inline void validate_shape(AxiomId axiom, const AxiomInstance& inst) {
  require_absent(axiom != AxiomId::AN && inst.sigma.has_value(), axiom, "a permutation");
  require_absent(axiom != AxiomId::AD && inst.b.has_value(), axiom, "a second problem");
  require_absent(!is_pairwise(axiom) && inst.pair.has_value(), axiom, "a pair");
  require_absent(!is_team_axiom(axiom) && axiom != AxiomId::AN && inst.team.has_value(), axiom,
                 "a team");
  if (axiom == AxiomId::AN && !inst.sigma) {
    throw Error(Errc::InvalidInstance, "AN instance needs a permutation");
  }
  if (axiom == AxiomId::AD && !inst.b) {
    throw Error(Errc::InvalidInstance, "AD instance needs a second problem");
  }
}

/// AN on one permutation: R_i(A) = R_{sigma(i)}(B), B = A with team i
/// renamed sigma(i).
inline std::optional<AxiomWitness> check_an(const Rule& rule, const Problem& a,
                                            const Allocation& ra, const Permutation& sigma,
                                            std::optional<Team> only = std::nullopt) {
  if (sigma.size() != a.size()) {
    throw Error(Errc::LengthMismatch, "permutation of length " + std::to_string(sigma.size()) +
                                          " for n = " + std::to_string(a.size()));
  }
  const Problem b = relabel_problem(a, sigma);
  const Allocation rb = rule(b);
  for (Team i = 1; i <= a.size(); ++i) {
    if (only && *only != i) continue;
    if (ra(i) != rb(sigma(i))) {
      return AxiomWitness{AxiomId::AN,
                          AxiomInstance{a, sigma, std::nullopt, std::nullopt, i},
                          {ra(i)},
                          {rb(sigma(i))},
                          "=",
                          r_of(i) + " = " + to_string(ra(i)) + " but " +
                              r_of(sigma(i), "A^sigma") + " = " + to_string(rb(sigma(i)))};
    }
  }
  return std::nullopt;
}

inline std::optional<AxiomWitness> check_ad(const Rule& rule, const Problem& a, const Problem& b) {
  const Problem sum = add_problems(a, b);
  const Allocation lhs = rule(sum);
  const Allocation rhs = rule(a) + rule(b);
  for (Team i = 1; i <= a.size(); ++i) {
    if (lhs(i) != rhs(i)) {
      return AxiomWitness{AxiomId::AD,
                          AxiomInstance{a, std::nullopt, b, std::nullopt, std::nullopt},
                          lhs.shares,
                          rhs.shares,
                          "=",
                          r_of(i, "A+B") + " = " + to_string(lhs(i)) + " but " + r_of(i) +
                              " + " + r_of(i, "B") + " = " + to_string(rhs(i))};
    }
  }
  return std::nullopt;
}

inline std::optional<AxiomWitness> check_pair(AxiomId axiom, const Problem& a, const Allocation& r,
                                              Team i, Team j) {
  const bool equality = is_symmetric_pairwise(axiom);
  const bool ok = equality ? r(i) == r(j) : r(i) >= r(j);
  if (ok) return std::nullopt;
  return AxiomWitness{axiom,
                      AxiomInstance{a, std::nullopt, std::nullopt, std::make_pair(i, j),
                                    std::nullopt},
                      {r(i)},
                      {r(j)},
                      equality ? "=" : ">=",
                      r_of(i) + " = " + to_string(r(i)) + (equality ? " != " : " < ") + r_of(j) +
                          " = " + to_string(r(j))};
}

inline std::optional<AxiomWitness> check_team(AxiomId axiom, const Problem& a, const Allocation& r,
                                              Team i) {
  Rational bound;
  std::string relation;
  std::string bound_name;
  switch (axiom) {
    case AxiomId::NT: bound = 0; relation = "="; bound_name = "0"; break;
    case AxiomId::ET: bound = a.claim(i); relation = "="; bound_name = "alpha_" + std::to_string(i); break;
    case AxiomId::MA: bound = a.claim(i); relation = "<="; bound_name = "alpha_" + std::to_string(i); break;
    case AxiomId::WUB: bound = a.total(); relation = "<="; bound_name = "||A||"; break;
    case AxiomId::NN: bound = 0; relation = ">="; bound_name = "0"; break;
    default: throw Error(Errc::InvalidInstance, std::string(axiom_name(axiom)));
  }
  const Rational& v = r(i);
  const bool ok = relation == "=" ? v == bound : relation == "<=" ? v <= bound : v >= bound;
  if (ok) return std::nullopt;
  return AxiomWitness{axiom,
                      AxiomInstance{a, std::nullopt, std::nullopt, std::nullopt, i},
                      {v},
                      {bound},
                      relation,
                      r_of(i) + " = " + to_string(v) + " violates " + relation + " " + bound_name +
                          " = " + to_string(bound)};
}

}  // namespace detail

/// Checks one instance exactly. Returns nullopt on pass, a witness on
/// failure. Pairwise and team axioms without a designated pair/team check
/// every qualifying one; a designated pair/team that misses the hypothesis
/// raises HypothesisNotMet.
inline std::optional<AxiomWitness> check_instance(AxiomId axiom, const Rule& rule,
                                                  const AxiomInstance& inst) {
  detail::validate_shape(axiom, inst);
  const Problem& a = inst.a;
  if (axiom == AxiomId::AN) {
    if (inst.team) require_team(a, *inst.team);
    return detail::check_an(rule, a, rule(a), *inst.sigma, inst.team);
  }
  if (axiom == AxiomId::AD) {
    if (inst.b->size() != a.size()) {
      throw Error(Errc::DimensionMismatch, "AD instance mixes n = " + std::to_string(a.size()) +
                                               " and n = " + std::to_string(inst.b->size()));
    }
    return detail::check_ad(rule, a, *inst.b);
  }
  if (is_pairwise(axiom)) {
    std::vector<std::pair<Team, Team>> pairs;
    if (inst.pair) {
      const auto [i, j] = *inst.pair;
      require_team(a, i);
      require_team(a, j);
      if (i == j) throw Error(Errc::SameTeam, "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!pair_qualifies(axiom, a, i, j)) {
        throw Error(Errc::HypothesisNotMet, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") does not meet the " +
                                                std::string(axiom_name(axiom)) + " hypothesis");
      }
      pairs.emplace_back(i, j);
    } else {
      pairs = qualifying_pairs(axiom, a);
    }
    if (pairs.empty()) return std::nullopt;
    const Allocation r = rule(a);
    for (const auto& [i, j] : pairs) {
      if (auto w = detail::check_pair(axiom, a, r, i, j)) return w;
    }
    return std::nullopt;
  }
  std::vector<Team> teams;
  if (inst.team) {
    require_team(a, *inst.team);
    if (!team_qualifies(axiom, a, *inst.team)) {
      throw Error(Errc::HypothesisNotMet, "team " + std::to_string(*inst.team) +
                                              " does not meet the " +
                                              std::string(axiom_name(axiom)) + " hypothesis");
    }
    teams.push_back(*inst.team);
  } else {
    for (Team i = 1; i <= a.size(); ++i) {
      if (team_qualifies(axiom, a, i)) teams.push_back(i);
    }
  }
  if (teams.empty()) return std::nullopt;
  const Allocation r = rule(a);
  for (Team i : teams) {
    if (auto w = detail::check_team(axiom, a, r, i)) return w;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Randomized search.

struct FalsifyResult {
  AxiomId axiom;
  std::optional<AxiomWitness> witness;
  /// Trials run (or, on failure, index of the witnessing trial + 1).
  std::size_t trials = 0;
  std::uint64_t seed = 0;

  bool found() const { return witness.has_value(); }

  std::string outcome() const {
    return found() ? "witness at trial " + std::to_string(trials - 1)
                   : "no witness in " + std::to_string(trials) + " trials";
  }
};

namespace detail {

inline Shape shape_for(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::ETE: return Shape::Copy;
    case AxiomId::WETE: return Shape::Symmetric;
    case AxiomId::SYM: return Shape::EqualClaims;
    case AxiomId::OP:
    case AxiomId::HOP:
    case AxiomId::AOP: return Shape::Dominant;
    case AxiomId::NT: return Shape::NullTeam;
    case AxiomId::ET: return Shape::EssentialTeam;
    default: return Shape::Random;
  }
}

/// One seeded trial. Half of the problems for hypothesis-bearing axioms are
/// shaped to meet the hypothesis.
inline std::optional<AxiomWitness> run_trial(AxiomId axiom, const Rule& rule,
                                             const GeneratorConfig& cfg, std::size_t index) {
  Rng rng(trial_seed(cfg.seed, index));
  const std::size_t n = rule.fixed_size().value_or(random_size(rng, cfg));
  const Shape target = shape_for(axiom);
  auto draw = [&] {
    if (target != Shape::Random && rng.chance(0.5)) return generate_problem(rng, cfg, n, target);
    return random_problem(rng, cfg, n);
  };
  const Problem a = draw();
  if (axiom == AxiomId::AN) {
    const Allocation ra = rule(a);
    if (n <= 4) {
      for (const Permutation& sigma : all_permutations(n)) {
        if (auto w = check_an(rule, a, ra, sigma)) return w;
      }
    } else {
      for (std::size_t k = 0; k < cfg.permutation_samples; ++k) {
        if (auto w = check_an(rule, a, ra, random_permutation(rng, n))) return w;
      }
    }
    return std::nullopt;
  }
  if (axiom == AxiomId::AD) {
    const Problem b = draw();
    return check_ad(rule, a, b);
  }
  return check_instance(axiom, rule, AxiomInstance{a, std::nullopt, std::nullopt, std::nullopt,
                                                   std::nullopt});
}

}  // namespace detail

/// Runs cfg.trials seeded trials and reports the lowest-index witness. Trial
/// k depends only on (cfg.seed, k), so the result does not depend on thread
/// count or scheduling.
inline FalsifyResult falsify(AxiomId axiom, const Rule& rule, const GeneratorConfig& cfg) {
  cfg.validate();
  if (rule.fixed_size() && *rule.fixed_size() < 3) {
    throw Error(Errc::TooFewTeams, rule.name());
  }
  auto hit = first_hit<AxiomWitness>(
      cfg.trials, cfg.threads, [&](std::size_t k) { return detail::run_trial(axiom, rule, cfg, k); });
  FalsifyResult out{axiom, std::move(hit.value), cfg.trials, cfg.seed};
  if (out.witness) out.trials = hit.index + 1;
  return out;
}

struct AuditReport {
  std::string rule;
  GeneratorConfig config;
  std::vector<FalsifyResult> results;

  bool all_pass() const {
    return std::none_of(results.begin(), results.end(),
                        [](const FalsifyResult& r) { return r.found(); });
  }
};

inline AuditReport audit(const Rule& rule, const std::vector<AxiomId>& axioms,
                         const GeneratorConfig& cfg) {
  AuditReport report{rule.name(), cfg, {}};
  report.results.reserve(axioms.size());
  for (AxiomId id : axioms) report.results.push_back(falsify(id, rule, cfg));
  return report;
}

}  // namespace broadcast

#endif  // BROADCAST_AXIOMS_HPP
