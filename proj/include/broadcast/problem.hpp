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

#ifndef BROADCAST_PROBLEM_HPP
#define BROADCAST_PROBLEM_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "broadcast/error.hpp"
#include "broadcast/rational.hpp"

namespace broadcast {

/// Team numbers are 1-based throughout the public interface.
using Team = std::size_t;

/// A broadcasting problem: entry (i, j) is the audience of the game team i
/// hosts against team j. Square, non-negative, zero diagonal, n >= 3.
///
/// Instances are immutable once validated; every transformation returns a
/// new problem.
class Problem {
 public:
  using Matrix = std::vector<std::vector<Rational>>;

  /// Checks every invariant and names the first offending cell.
  static Problem validate(const Matrix& raw, std::vector<std::string> labels = {}) {
    const std::size_t n = raw.size();
    for (std::size_t r = 0; r < n; ++r) {
      if (raw[r].size() != n) {
        throw Error(Errc::NonSquare, "row " + std::to_string(r + 1) + " has " +
                                         std::to_string(raw[r].size()) + " entries, expected " +
                                         std::to_string(n));
      }
    }
    if (n < 3) {
      throw Error(Errc::TooFewTeams, "n = " + std::to_string(n) + ", at least 3 teams required");
    }
    Problem p(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Rational v = raw[r][c];
        v.canonicalize();
        if (r == c && v != 0) {
          throw Error(Errc::NonzeroDiagonal, "entry (" + std::to_string(r + 1) + "," +
                                                 std::to_string(c + 1) + ") = " + to_string(v));
        }
        if (v < 0) {
          throw Error(Errc::NegativeEntry, "entry (" + std::to_string(r + 1) + "," +
                                               std::to_string(c + 1) + ") = " + to_string(v));
        }
        p.cells_[r * n + c] = std::move(v);
      }
    }
    if (!labels.empty() && labels.size() != n) {
      throw Error(Errc::LengthMismatch, std::to_string(labels.size()) + " labels for " +
                                            std::to_string(n) + " teams");
    }
    p.labels_ = std::move(labels);
    return p;
  }

  static Problem zero(std::size_t n) {
    if (n < 3) throw Error(Errc::TooFewTeams, "n = " + std::to_string(n));
    return Problem(n);
  }

  std::size_t size() const noexcept { return n_; }

  /// a_ij with 1-based teams.
  const Rational& operator()(Team i, Team j) const { return cells_[(i - 1) * n_ + (j - 1)]; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Matrix rows() const {
    Matrix out(n_, std::vector<Rational>(n_));
    for (Team i = 1; i <= n_; ++i) {
      for (Team j = 1; j <= n_; ++j) out[i - 1][j - 1] = (*this)(i, j);
    }
    return out;
  }

  /// ||A||.
  Rational total() const {
    return std::accumulate(cells_.begin(), cells_.end(), Rational(0));
  }

  /// Audience of the games team i hosted.
  Rational home(Team i) const {
    Rational s = 0;
    for (Team j = 1; j <= n_; ++j) s += (*this)(i, j);
    return s;
  }

  /// Audience of the games team i played away.
  Rational away(Team i) const {
    Rational s = 0;
    for (Team j = 1; j <= n_; ++j) s += (*this)(j, i);
    return s;
  }

  /// alpha_i: every game team i took part in.
  Rational claim(Team i) const { return home(i) + away(i); }

  std::vector<Rational> claims() const {
    std::vector<Rational> out;
    out.reserve(n_);
    for (Team i = 1; i <= n_; ++i) out.push_back(claim(i));
    return out;
  }

  bool is_valid_team(Team i) const noexcept { return i >= 1 && i <= n_; }

  friend bool operator==(const Problem& a, const Problem& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  explicit Problem(std::size_t n) : n_(n), cells_(n * n, Rational(0)) {}

  Rational& cell(Team i, Team j) { return cells_[(i - 1) * n_ + (j - 1)]; }

  std::size_t n_ = 0;
  std::vector<Rational> cells_;
  std::vector<std::string> labels_;

  friend class ProblemBuilder;
};

/// Mutable scratch space for assembling problems inside the library;
/// build() hands back a validated, immutable Problem.
class ProblemBuilder {
 public:
  explicit ProblemBuilder(std::size_t n) : p_(Problem::zero(n)) {}
  explicit ProblemBuilder(const Problem& from) : p_(from) {}

  std::size_t size() const noexcept { return p_.size(); }
  Rational& operator()(Team i, Team j) { return p_.cell(i, j); }
  const Rational& operator()(Team i, Team j) const { return p_(i, j); }

  Problem build() const {
    for (Team i = 1; i <= p_.size(); ++i) {
      for (Team j = 1; j <= p_.size(); ++j) {
        if (p_(i, j) < 0 || (i == j && p_(i, j) != 0)) return Problem::validate(p_.rows());
      }
    }
    return p_;
  }

 private:
  Problem p_;
};

inline void require_team(const Problem& a, Team i) {
  if (!a.is_valid_team(i)) {
    throw Error(Errc::BadTeamIndex,
                "team " + std::to_string(i) + " outside 1.." + std::to_string(a.size()));
  }
}

/// A bijection on {1..n}; mapping[i-1] is the image of team i.
class Permutation {
 public:
  explicit Permutation(std::vector<Team> mapping) : map_(std::move(mapping)) {
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t k = 0; k < map_.size(); ++k) {
      const Team t = map_[k];
      if (t < 1 || t > map_.size() || seen[t - 1]) {
        throw Error(Errc::NotBijective, "image of team " + std::to_string(k + 1) + " is " +
                                            std::to_string(t));
      }
      seen[t - 1] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Team> m(n);
    std::iota(m.begin(), m.end(), Team{1});
    return Permutation(std::move(m));
  }

  static Permutation transposition(std::size_t n, Team i, Team j) {
    std::vector<Team> m(n);
    std::iota(m.begin(), m.end(), Team{1});
    if (i < 1 || i > n || j < 1 || j > n) {
      throw Error(Errc::BadTeamIndex, "transposition (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") on " + std::to_string(n) +
                                          " teams");
    }
    std::swap(m[i - 1], m[j - 1]);
    return Permutation(std::move(m));
  }

  std::size_t size() const noexcept { return map_.size(); }
  Team operator()(Team i) const { return map_[i - 1]; }
  const std::vector<Team>& mapping() const noexcept { return map_; }

  Permutation inverse() const {
    std::vector<Team> inv(map_.size());
    for (std::size_t k = 0; k < map_.size(); ++k) inv[map_[k] - 1] = k + 1;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Team> map_;
};

/// All n! permutations in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Team> m(n);
  std::iota(m.begin(), m.end(), Team{1});
  std::vector<Permutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

/// Per-team revenue shares, one entry per team.
struct Allocation {
  std::vector<Rational> shares;

  std::size_t size() const noexcept { return shares.size(); }
  const Rational& operator()(Team i) const { return shares[i - 1]; }

  Rational sum() const { return std::accumulate(shares.begin(), shares.end(), Rational(0)); }

  friend bool operator==(const Allocation&, const Allocation&) = default;

  friend Allocation operator+(const Allocation& a, const Allocation& b) {
    if (a.size() != b.size()) {
      throw Error(Errc::DimensionMismatch, "allocations of size " + std::to_string(a.size()) +
                                               " and " + std::to_string(b.size()));
    }
    Allocation out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out.shares[k] += b.shares[k];
    return out;
  }

  friend Allocation operator*(const Rational& s, const Allocation& a) {
    Allocation out = a;
    for (auto& v : out.shares) v *= s;
    return out;
  }
};

inline Rational total_audience(const Problem& a) { return a.total(); }
inline std::vector<Rational> claims(const Problem& a) { return a.claims(); }

/// The problem whose only audience is one viewer of the game i hosts against j.
inline Problem unit_problem(std::size_t n, Team i, Team j) {
  if (n < 3) throw Error(Errc::TooFewTeams, "n = " + std::to_string(n));
  if (i < 1 || i > n || j < 1 || j > n) {
    throw Error(Errc::BadTeamIndex, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") outside 1.." + std::to_string(n));
  }
  if (i == j) throw Error(Errc::SameTeam, "unit problem needs two teams, got " + std::to_string(i) + " twice");
  ProblemBuilder b(n);
  b(i, j) = 1;
  return b.build();
}

/// Entry (i, j) of the result is a_{sigma(i) sigma(j)}.
inline Problem permute_problem(const Problem& a, const Permutation& sigma) {
  if (sigma.size() != a.size()) {
    throw Error(Errc::LengthMismatch, "permutation of length " + std::to_string(sigma.size()) +
                                          " for " + std::to_string(a.size()) + " teams");
  }
  ProblemBuilder b(a.size());
  for (Team i = 1; i <= a.size(); ++i) {
    for (Team j = 1; j <= a.size(); ++j) b(i, j) = a(sigma(i), sigma(j));
  }
  return b.build();
}

/// The same tournament with team i renamed sigma(i): entry
/// (sigma(i), sigma(j)) of the result is a_ij. This is the image the
/// anonymity axiom compares against.
inline Problem relabel_problem(const Problem& a, const Permutation& sigma) {
  return permute_problem(a, sigma.inverse());
}

/// A^{i0}: every game team i hosted gets zero audience.
inline Problem nullify_home(const Problem& a, Team i) {
  require_team(a, i);
  ProblemBuilder b(a);
  for (Team j = 1; j <= a.size(); ++j) b(i, j) = 0;
  return b.build();
}

/// A^{0i}: every game team i played away gets zero audience.
inline Problem nullify_away(const Problem& a, Team i) {
  require_team(a, i);
  ProblemBuilder b(a);
  for (Team j = 1; j <= a.size(); ++j) b(j, i) = 0;
  return b.build();
}

inline Problem add_problems(const Problem& a, const Problem& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch, std::to_string(a.size()) + " vs " +
                                             std::to_string(b.size()) + " teams");
  }
  ProblemBuilder out(a);
  for (Team i = 1; i <= a.size(); ++i) {
    for (Team j = 1; j <= a.size(); ++j) out(i, j) += b(i, j);
  }
  return out.build();
}

inline Problem scale_problem(const Problem& a, const Rational& factor) {
  if (factor < 0) throw Error(Errc::NegativeEntry, "negative scale " + to_string(factor));
  ProblemBuilder out(a);
  for (Team i = 1; i <= a.size(); ++i) {
    for (Team j = 1; j <= a.size(); ++j) out(i, j) *= factor;
  }
  return out.build();
}

}  // namespace broadcast

#endif  // BROADCAST_PROBLEM_HPP
