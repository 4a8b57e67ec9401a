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

#ifndef BROADCAST_GENERATOR_HPP
#define BROADCAST_GENERATOR_HPP

// Seeded problem generator. Every draw goes through the helpers below rather
// than std:: distributions, whose output is implementation-defined, so a seed
// reproduces the same problems on every toolchain.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "broadcast/error.hpp"
#include "broadcast/problem.hpp"
#include "broadcast/rational.hpp"

namespace broadcast {

struct GeneratorConfig {
  std::size_t n_min = 3;
  std::size_t n_max = 6;
  /// Entries are drawn from [0, max_entry] (before structuring).
  long max_entry = 100;
  /// Probability that an off-diagonal entry is zero.
  double sparsity = 0.3;
  /// Probability of reshaping a random problem so that an equality,
  /// dominance, null-team or essential-team hypothesis holds.
  double duplication_bias = 0.5;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  /// Worker threads for trial loops; 0 picks hardware concurrency.
  std::size_t threads = 0;
  /// Permutations drawn per AN trial when n > 4.
  std::size_t permutation_samples = 12;

  void validate() const {
    if (trials < 1) throw Error(Errc::ParamOutOfRange, "trials must be >= 1");
    if (n_min < 3) throw Error(Errc::TooFewTeams, "n_min = " + std::to_string(n_min));
    if (n_max < n_min) throw Error(Errc::ParamOutOfRange, "n_max < n_min");
    if (max_entry < 1) throw Error(Errc::ParamOutOfRange, "max_entry must be >= 1");
    if (!(sparsity >= 0 && sparsity <= 1)) {
      throw Error(Errc::ParamOutOfRange, "sparsity must lie in [0,1]");
    }
    if (!(duplication_bias >= 0 && duplication_bias <= 1)) {
      throw Error(Errc::ParamOutOfRange, "duplication_bias must lie in [0,1]");
    }
  }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream for trial `index` of a run seeded with `seed`.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - bound) % bound;
    while (true) {
      const std::uint64_t r = next();
      if (limit == 0 || r < limit) return r % bound;
    }
  }

  /// Uniform on [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool chance(double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    // 53 random bits compared against p.
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return u < p;
  }

  Team team(std::size_t n) { return static_cast<Team>(below(n)) + 1; }

  /// Two distinct teams.
  std::pair<Team, Team> pair(std::size_t n) {
    const Team i = team(n);
    Team j = team(n - 1);
    if (j >= i) ++j;
    return {i, j};
  }

 private:
  std::mt19937_64 engine_;
};

inline Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<Team> m(n);
  for (std::size_t k = 0; k < n; ++k) m[k] = k + 1;
  for (std::size_t k = n; k > 1; --k) std::swap(m[k - 1], m[rng.below(k)]);
  return Permutation(std::move(m));
}

/// Structural shapes the generator can impose.
enum class Shape {
  Random,
  Small,        // total audience around the threshold rules' constant
  Unit,         // one non-zero game
  Copy,         // two teams equal against all others (ETE)
  Symmetric,    // Copy plus a_ij = a_ji (WETE)
  EqualClaims,  // two teams with equal claims (SYM)
  Dominant,     // one team dominates another against all others
  NullTeam,
  EssentialTeam,
};

inline constexpr std::array<Shape, 8> kStructuredShapes = {
    Shape::Small,  Shape::Unit,     Shape::Copy,          Shape::Symmetric,
    Shape::EqualClaims, Shape::Dominant, Shape::NullTeam, Shape::EssentialTeam,
};

namespace detail {

inline Rational draw_entry(Rng& rng, long hi, bool fractional) {
  const long v = rng.range(0, hi);
  if (!fractional || v == 0) return Rational(v);
  return make_rational(v, rng.range(2, 3));
}

}  // namespace detail

inline Problem generate_problem(Rng& rng, const GeneratorConfig& cfg, std::size_t n, Shape shape) {
  ProblemBuilder b(n);
  const bool small = shape == Shape::Small || rng.chance(0.2);
  const long hi = small ? 2 : cfg.max_entry;
  const double sparsity = small ? std::max(cfg.sparsity, 0.6) : cfg.sparsity;
  const bool fractional = rng.chance(0.1);
  for (Team i = 1; i <= n; ++i) {
    for (Team j = 1; j <= n; ++j) {
      if (i != j && !rng.chance(sparsity)) b(i, j) = detail::draw_entry(rng, hi, fractional);
    }
  }

  switch (shape) {
    case Shape::Random:
    case Shape::Small:
      break;
    case Shape::Unit: {
      const auto [i, j] = rng.pair(n);
      b = ProblemBuilder(n);
      b(i, j) = rng.chance(0.5) ? Rational(1) : Rational(rng.range(1, cfg.max_entry));
      break;
    }
    case Shape::Copy:
    case Shape::Symmetric: {
      const auto [i, j] = rng.pair(n);
      for (Team k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        b(j, k) = b(i, k);
        b(k, j) = b(k, i);
      }
      if (shape == Shape::Symmetric) b(j, i) = b(i, j);
      break;
    }
    case Shape::EqualClaims: {
      // Top up the poorer of two teams through a game against a third one.
      const auto [i, j] = rng.pair(n);
      const Problem p = b.build();
      const Rational gap = p.claim(i) - p.claim(j);
      Team k = 1;
      while (k == i || k == j) ++k;
      if (gap > 0) {
        b(j, k) += gap;
      } else if (gap < 0) {
        b(i, k) -= gap;
      }
      break;
    }
    case Shape::Dominant: {
      const auto [i, j] = rng.pair(n);
      for (Team k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        b(i, k) = b(j, k) + (rng.chance(0.5) ? Rational(0) : Rational(rng.range(0, hi)));
        b(k, i) = b(k, j) + (rng.chance(0.5) ? Rational(0) : Rational(rng.range(0, hi)));
      }
      if (rng.chance(0.3)) b(j, i) = b(i, j);
      break;
    }
    case Shape::NullTeam: {
      const Team i = rng.team(n);
      for (Team k = 1; k <= n; ++k) {
        b(i, k) = 0;
        b(k, i) = 0;
      }
      break;
    }
    case Shape::EssentialTeam: {
      const Team i = rng.team(n);
      for (Team j = 1; j <= n; ++j) {
        for (Team k = 1; k <= n; ++k) {
          if (j != i && k != i) b(j, k) = 0;
        }
      }
      break;
    }
  }
  return b.build();
}

/// A random problem: structured with probability cfg.duplication_bias.
inline Problem random_problem(Rng& rng, const GeneratorConfig& cfg, std::size_t n) {
  Shape shape = Shape::Random;
  if (rng.chance(cfg.duplication_bias)) {
    shape = kStructuredShapes[rng.below(kStructuredShapes.size())];
  }
  return generate_problem(rng, cfg, n, shape);
}

inline std::size_t random_size(Rng& rng, const GeneratorConfig& cfg) {
  return static_cast<std::size_t>(
      rng.range(static_cast<long>(cfg.n_min), static_cast<long>(cfg.n_max)));
}

}  // namespace broadcast

#endif  // BROADCAST_GENERATOR_HPP
