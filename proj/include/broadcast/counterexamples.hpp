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

#ifndef BROADCAST_COUNTEREXAMPLES_HPP
#define BROADCAST_COUNTEREXAMPLES_HPP

// Catalog of rules that each satisfy all but one axiom of a
// characterization. They exist to show the axioms are independent, so most
// of them are deliberately unfair in one specific way.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "broadcast/error.hpp"
#include "broadcast/families.hpp"
#include "broadcast/hypotheses.hpp"
#include "broadcast/problem.hpp"
#include "broadcast/rule.hpp"

namespace broadcast {

enum class CounterexampleId {
  R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11, R12, R13,
  T1_WETE,
  T1_ETE,
};

inline constexpr std::array<CounterexampleId, 15> kAllCounterexamples = {
    CounterexampleId::R1,  CounterexampleId::R2,  CounterexampleId::R3,
    CounterexampleId::R4,  CounterexampleId::R5,  CounterexampleId::R6,
    CounterexampleId::R7,  CounterexampleId::R8,  CounterexampleId::R9,
    CounterexampleId::R10, CounterexampleId::R11, CounterexampleId::R12,
    CounterexampleId::R13, CounterexampleId::T1_WETE, CounterexampleId::T1_ETE,
};

inline std::string_view counterexample_name(CounterexampleId id) {
  switch (id) {
    case CounterexampleId::R1: return "R1";
    case CounterexampleId::R2: return "R2";
    case CounterexampleId::R3: return "R3";
    case CounterexampleId::R4: return "R4";
    case CounterexampleId::R5: return "R5";
    case CounterexampleId::R6: return "R6";
    case CounterexampleId::R7: return "R7";
    case CounterexampleId::R8: return "R8";
    case CounterexampleId::R9: return "R9";
    case CounterexampleId::R10: return "R10";
    case CounterexampleId::R11: return "R11";
    case CounterexampleId::R12: return "R12";
    case CounterexampleId::R13: return "R13";
    case CounterexampleId::T1_WETE: return "T1-WETE";
    case CounterexampleId::T1_ETE: return "T1-ETE";
  }
  return "?";
}

inline std::optional<CounterexampleId> parse_counterexample(std::string_view name) {
  for (auto id : kAllCounterexamples) {
    if (counterexample_name(id) == name) return id;
  }
  return std::nullopt;
}

/// Separable rules below only exist for three teams.
inline std::optional<std::size_t> counterexample_fixed_size(CounterexampleId id) {
  switch (id) {
    case CounterexampleId::R8:
    case CounterexampleId::R10:
    case CounterexampleId::R11:
    case CounterexampleId::R13:
      return 3;
    default:
      return std::nullopt;
  }
}

namespace counter {

/// Threshold on ||A|| used by the piecewise rules.
inline const Rational kThreshold = 10;

inline Allocation zeros(std::size_t n) { return Allocation{std::vector<Rational>(n, Rational(0))}; }

/// Every game's audience goes to the lower-numbered participant.
inline Allocation lowest_number(const Problem& a) {
  Allocation out = zeros(a.size());
  for (Team i = 1; i <= a.size(); ++i) {
    for (Team j = i + 1; j <= a.size(); ++j) out.shares[i - 1] += a(i, j) + a(j, i);
  }
  return out;
}

/// Each game is split between its participants in proportion to their
/// audiences against everybody else. When neither has any such audience the
/// game is split equally.
inline Allocation proportional_to_others(const Problem& a) {
  const std::size_t n = a.size();
  auto outside = [&](Team i, Team j) {
    Rational s = 0;
    for (Team k = 1; k <= n; ++k) {
      if (k != i && k != j) s += a(i, k) + a(k, i);
    }
    return s;
  };
  Allocation out = zeros(n);
  for (Team i = 1; i <= n; ++i) {
    for (Team j = 1; j <= n; ++j) {
      if (i == j) continue;
      const Rational game = a(i, j) + a(j, i);
      if (game == 0) continue;
      const Rational wi = outside(i, j);
      const Rational wj = outside(j, i);
      const Rational weight = (wi + wj == 0) ? Rational(1, 2) : Rational(wi / (wi + wj));
      out.shares[i - 1] += weight * game;
    }
  }
  return out;
}

/// Additive extension of: 1 to both participants of 1^{ij}, -1 to the
/// lowest-numbered outsider.
inline Allocation lowest_outsider_pays(const Problem& a) {
  Allocation out = zeros(a.size());
  for (Team i = 1; i <= a.size(); ++i) {
    for (Team j = 1; j <= a.size(); ++j) {
      if (i == j || a(i, j) == 0) continue;
      Team m = 1;
      while (m == i || m == j) ++m;
      out.shares[i - 1] += a(i, j);
      out.shares[j - 1] += a(i, j);
      out.shares[m - 1] -= a(i, j);
    }
  }
  return out;
}

using Table3 = std::array<std::array<const char*, 3>, 3>;
using ShareTable = std::array<std::array<Rational, 3>, 3>;

inline ShareTable parse_table(const Table3& text) {
  ShareTable out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out[r][c] = parse_rational(text[r][c]);
  }
  return out;
}

/// Separable rule on three teams: on 1^{ij} the host gets home[i][j], the
/// visitor away[i][j] and the third team the remainder. Budget balance at
/// n = 3 leaves no other reading of the two tables.
inline Allocation separable(const Problem& a, const ShareTable& home, const ShareTable& away) {
  Allocation out = zeros(3);
  for (Team i = 1; i <= 3; ++i) {
    for (Team j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const Team k = 6 - i - j;
      const Rational& x = home[i - 1][j - 1];
      const Rational& y = away[i - 1][j - 1];
      out.shares[i - 1] += x * a(i, j);
      out.shares[j - 1] += y * a(i, j);
      out.shares[k - 1] += (1 - x - y) * a(i, j);
    }
  }
  return out;
}

// Tables for the home-favouring separable rules. Their away-favouring
// partners use the same tables with home and away exchanged.
inline constexpr Table3 kR8Home = {{{"0", "0.69", "0.83"}, {"0.63", "0", "0.90"}, {"0.69", "0.83", "0"}}};
inline constexpr Table3 kR8Away = {{{"0", "0.56", "0.49"}, {"0.49", "0", "0.35"}, {"0.35", "0.28", "0"}}};
inline constexpr Table3 kR11Home = {{{"0", "0.50", "0.60"}, {"0.45", "0", "0.65"}, {"0.50", "0.60", "0"}}};
inline constexpr Table3 kR11Away = {{{"0", "0.40", "0.35"}, {"0.35", "0", "0.25"}, {"0.25", "0.20", "0"}}};

/// ||A|| split equally among team 1 and every team linked to it through a
/// chain of pairwise-equal teams.
template <typename Equal>
Allocation favour_team_one(const Problem& a, Equal equal) {
  const std::size_t n = a.size();
  std::vector<bool> in(n + 1, false);
  std::vector<Team> stack{1};
  in[1] = true;
  while (!stack.empty()) {
    const Team t = stack.back();
    stack.pop_back();
    for (Team j = 1; j <= n; ++j) {
      if (!in[j] && equal(a, t, j)) {
        in[j] = true;
        stack.push_back(j);
      }
    }
  }
  long members = 0;
  for (Team t = 1; t <= n; ++t) members += in[t] ? 1 : 0;
  const Rational share = a.total() / Rational(members);
  Allocation out = zeros(n);
  for (Team t = 1; t <= n; ++t) {
    if (in[t]) out.shares[t - 1] = share;
  }
  return out;
}

}  // namespace counter

inline Rule make_counterexample(CounterexampleId id) {
  using family::additive_extension;
  using family::concede_and_divide;
  using family::equal_split;
  using family::uniform;
  const std::string name = "counter:" + std::string(counterexample_name(id));
  const auto fixed = counterexample_fixed_size(id);
  switch (id) {
    case CounterexampleId::R1:
      return Rule(name, counter::lowest_number);
    case CounterexampleId::R2:
      return Rule(name, counter::proportional_to_others);
    case CounterexampleId::R3:
      return Rule(name, counter::lowest_outsider_pays);
    case CounterexampleId::R4:
      return Rule(name, [](const Problem& a) {
        return has_essential_team(a) ? concede_and_divide(a) : uniform(a);
      });
    case CounterexampleId::R5:
      return Rule(name, [](const Problem& a) {
        return a.total() <= counter::kThreshold ? equal_split(a) : concede_and_divide(a);
      });
    case CounterexampleId::R6:
      // unit values (2, 2, -3/(n-2))
      return Rule(name, [](const Problem& a) { return additive_extension(a, 2, 2); });
    case CounterexampleId::R7:
      // unit values (0, 0, 1/(n-2))
      return Rule(name, [](const Problem& a) { return additive_extension(a, 0, 0); });
    case CounterexampleId::R8:
      return Rule(name, [home = counter::parse_table(counter::kR8Home),
                         away = counter::parse_table(counter::kR8Away)](const Problem& a) {
        return counter::separable(a, home, away);
      }, fixed);
    case CounterexampleId::R9:
      return Rule(name, [](const Problem& a) {
        return a.total() <= counter::kThreshold ? uniform(a) : concede_and_divide(a);
      });
    case CounterexampleId::R10:
      return Rule(name, [home = counter::parse_table(counter::kR8Away),
                         away = counter::parse_table(counter::kR8Home)](const Problem& a) {
        return counter::separable(a, home, away);
      }, fixed);
    case CounterexampleId::R11:
      return Rule(name, [home = counter::parse_table(counter::kR11Home),
                         away = counter::parse_table(counter::kR11Away)](const Problem& a) {
        return counter::separable(a, home, away);
      }, fixed);
    case CounterexampleId::R12:
      return Rule(name, [](const Problem& a) {
        return a.total() <= counter::kThreshold ? uniform(a) : equal_split(a);
      });
    case CounterexampleId::R13:
      return Rule(name, [home = counter::parse_table(counter::kR11Away),
                         away = counter::parse_table(counter::kR11Home)](const Problem& a) {
        return counter::separable(a, home, away);
      }, fixed);
    case CounterexampleId::T1_WETE:
      return Rule(name, [](const Problem& a) { return counter::favour_team_one(a, wete_equal); });
    case CounterexampleId::T1_ETE:
      return Rule(name, [](const Problem& a) { return counter::favour_team_one(a, ete_equal); });
  }
  throw Error(Errc::UnknownRule, name);
}

}  // namespace broadcast

#endif  // BROADCAST_COUNTEREXAMPLES_HPP
