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

#ifndef BROADCAST_HYPOTHESES_HPP
#define BROADCAST_HYPOTHESES_HPP

// Structural predicates on problems: when are two teams "equal" or one
// "dominant", and when is a team null or essential.

#include "broadcast/problem.hpp"

namespace broadcast {

/// i and j draw the same audience against every third team, home and away.
inline bool same_against_others(const Problem& a, Team i, Team j) {
  for (Team k = 1; k <= a.size(); ++k) {
    if (k == i || k == j) continue;
    if (a(i, k) != a(j, k) || a(k, i) != a(k, j)) return false;
  }
  return true;
}

/// i draws at least the audience of j against every third team.
inline bool dominates_against_others(const Problem& a, Team i, Team j) {
  for (Team k = 1; k <= a.size(); ++k) {
    if (k == i || k == j) continue;
    if (a(i, k) < a(j, k) || a(k, i) < a(k, j)) return false;
  }
  return true;
}

inline bool ete_equal(const Problem& a, Team i, Team j) {
  return i != j && same_against_others(a, i, j);
}

/// ETE plus equal audience in the two mutual games; equivalently the
/// transposition (i j) leaves the problem unchanged.
inline bool wete_equal(const Problem& a, Team i, Team j) {
  return ete_equal(a, i, j) && a(i, j) == a(j, i);
}

inline bool sym_equal(const Problem& a, Team i, Team j) {
  return i != j && a.claim(i) == a.claim(j);
}

inline bool op_dominates(const Problem& a, Team i, Team j) {
  return i != j && dominates_against_others(a, i, j);
}

inline bool hop_dominates(const Problem& a, Team i, Team j) {
  return op_dominates(a, i, j) && a(i, j) >= a(j, i);
}

inline bool aop_dominates(const Problem& a, Team i, Team j) {
  return op_dominates(a, i, j) && a(j, i) >= a(i, j);
}

/// Every game involving i has zero audience.
inline bool is_null_team(const Problem& a, Team i) {
  for (Team j = 1; j <= a.size(); ++j) {
    if (a(i, j) != 0 || a(j, i) != 0) return false;
  }
  return true;
}

/// Every game not involving i has zero audience.
inline bool is_essential_team(const Problem& a, Team i) {
  for (Team j = 1; j <= a.size(); ++j) {
    if (j == i) continue;
    for (Team k = 1; k <= a.size(); ++k) {
      if (k != i && a(j, k) != 0) return false;
    }
  }
  return true;
}

inline bool has_essential_team(const Problem& a) {
  for (Team i = 1; i <= a.size(); ++i) {
    if (is_essential_team(a, i)) return true;
  }
  return false;
}

}  // namespace broadcast

#endif  // BROADCAST_HYPOTHESES_HPP
