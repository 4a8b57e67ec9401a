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

#ifndef BROADCAST_FAMILIES_HPP
#define BROADCAST_FAMILIES_HPP

// Closed-form evaluation of every rule family. Each function is O(n^2) and
// budget-balanced for parameters inside the family's domain; the domain
// checks live next to the formulas so that a caller cannot reach a formula
// with out-of-range parameters.

#include <algorithm>
#include <cstddef>
#include <string>

#include "broadcast/error.hpp"
#include "broadcast/problem.hpp"
#include "broadcast/rational.hpp"

namespace broadcast::family {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::ParamOutOfRange, what);
}

inline Rational n_of(const Problem& a) { return Rational(static_cast<long>(a.size())); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Parameter domains.

inline void check_unit_interval(const Rational& lambda, const std::string& family) {
  detail::require(lambda >= 0 && lambda <= 1,
                  family + ": lambda = " + to_string(lambda) + " violates 0 <= lambda <= 1");
}

inline void check_general(const Rational& x, const Rational& y, const Rational& z, std::size_t n) {
  const Rational lhs = x + y + Rational(static_cast<long>(n)) * z;
  if (lhs != 1) {
    throw Error(Errc::ConstraintViolated, "general: x + y + n z = " + to_string(lhs) +
                                              " != 1 for n = " + std::to_string(n));
  }
}

inline void check_extended_ec(const Rational& xp, const Rational& yp) {
  detail::require(xp >= 0 && xp <= 1, "ext-ec: x' = " + to_string(xp) + " violates 0 <= x' <= 1");
  detail::require(yp >= 0 && yp <= 1, "ext-ec: y' = " + to_string(yp) + " violates 0 <= y' <= 1");
  detail::require(xp + yp >= 1, "ext-ec: x' + y' = " + to_string(Rational(xp + yp)) +
                                    " violates x' + y' >= 1");
}

/// The size-free part of the extended UC/UE domains, checked at
/// construction before n is known.
inline void check_extended_shape(const Rational& xp, const Rational& yp, const std::string& family) {
  const Rational hi = std::max(xp, yp);
  const Rational lo = std::min(xp, yp);
  detail::require(hi <= 1, family + ": max{x',y'} = " + to_string(hi) + " violates max <= 1");
  detail::require(lo >= 0, family + ": min{x',y'} = " + to_string(lo) + " violates min >= 0");
}

inline void check_extended_uc(const Rational& xp, const Rational& yp, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  const Rational hi = std::max(xp, yp);
  const Rational lo = std::min(xp, yp);
  detail::require(hi >= 1 / nn && hi <= 1, "ext-uc: max{x',y'} = " + to_string(hi) +
                                               " violates 1/n <= max <= 1 for n = " +
                                               std::to_string(n));
  const Rational floor = (1 - hi) / (nn - 1);
  detail::require(lo >= floor && lo <= hi, "ext-uc: min{x',y'} = " + to_string(lo) +
                                               " violates (1-max)/(n-1) = " + to_string(floor) +
                                               " <= min <= max");
}

/// The lower bound (1-max)/(n-1) on min{x',y'} is what keeps outsiders at
/// or below the weaker participant on a unit problem; without it home/away
/// order preservation fails.
inline void check_extended_ue(const Rational& xp, const Rational& yp, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  const Rational hi = std::max(xp, yp);
  const Rational lo = std::min(xp, yp);
  detail::require(hi >= 1 / nn && hi <= 1, "ext-ue: max{x',y'} = " + to_string(hi) +
                                               " violates 1/n <= max <= 1 for n = " +
                                               std::to_string(n));
  const Rational floor = (1 - hi) / (nn - 1);
  detail::require(lo >= floor && lo <= 1 - hi, "ext-ue: min{x',y'} = " + to_string(lo) +
                                                   " violates (1-max)/(n-1) = " + to_string(floor) +
                                                   " <= min <= 1 - max");
}

/// Membership in the closed parameter regions, without the diagnostics.
inline bool in_extended_ec(const Rational& xp, const Rational& yp) {
  return xp >= 0 && xp <= 1 && yp >= 0 && yp <= 1 && xp + yp >= 1;
}

inline bool in_extended_uc(const Rational& xp, const Rational& yp, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  const Rational hi = std::max(xp, yp);
  const Rational lo = std::min(xp, yp);
  return hi >= 1 / nn && hi <= 1 && lo >= (1 - hi) / (nn - 1);
}

inline bool in_extended_ue(const Rational& xp, const Rational& yp, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  const Rational hi = std::max(xp, yp);
  const Rational lo = std::min(xp, yp);
  return hi >= 1 / nn && hi <= 1 && lo >= (1 - hi) / (nn - 1) && lo <= 1 - hi;
}

// ---------------------------------------------------------------------------
// Focal rules.

inline Allocation uniform(const Problem& a) {
  return Allocation{std::vector<Rational>(a.size(), a.total() / detail::n_of(a))};
}

inline Allocation equal_split(const Problem& a) {
  Allocation out;
  out.shares.reserve(a.size());
  for (Team i = 1; i <= a.size(); ++i) out.shares.push_back(a.claim(i) / 2);
  return out;
}

inline Allocation concede_and_divide(const Problem& a) {
  const Rational n = detail::n_of(a);
  const Rational total = a.total();
  Allocation out;
  out.shares.reserve(a.size());
  for (Team i = 1; i <= a.size(); ++i) out.shares.push_back(((n - 1) * a.claim(i) - total) / (n - 2));
  return out;
}

/// CD_i(A^{i0}) without materialising the nullified matrix.
inline Rational cd_home_nullified(const Problem& a, Team i) {
  const Rational n = detail::n_of(a);
  return ((n - 1) * a.away(i) - (a.total() - a.home(i))) / (n - 2);
}

/// CD_i(A^{0i}).
inline Rational cd_away_nullified(const Problem& a, Team i) {
  const Rational n = detail::n_of(a);
  return ((n - 1) * a.home(i) - (a.total() - a.away(i))) / (n - 2);
}

// ---------------------------------------------------------------------------
// Linear families.

/// Each game: 1 - lambda to the host, lambda to the visitor.
inline Allocation split(const Problem& a, const Rational& lambda) {
  Allocation out;
  out.shares.reserve(a.size());
  for (Team i = 1; i <= a.size(); ++i) out.shares.push_back((1 - lambda) * a.home(i) + lambda * a.away(i));
  return out;
}

inline Allocation general(const Problem& a, const Rational& x, const Rational& y, const Rational& z) {
  check_general(x, y, z, a.size());
  const Rational total = a.total();
  Allocation out;
  out.shares.reserve(a.size());
  for (Team i = 1; i <= a.size(); ++i) out.shares.push_back(x * a.home(i) + y * a.away(i) + z * total);
  return out;
}

inline Allocation mix(const Rational& lambda, const Allocation& first, const Allocation& second) {
  return lambda * first + (1 - lambda) * second;
}

inline Allocation ec(const Problem& a, const Rational& lambda) {
  return mix(lambda, equal_split(a), concede_and_divide(a));
}

inline Allocation uc(const Problem& a, const Rational& lambda) {
  return mix(lambda, uniform(a), concede_and_divide(a));
}

inline Allocation ue(const Problem& a, const Rational& lambda) {
  return mix(lambda, uniform(a), equal_split(a));
}

/// Shares x'H_i + y'W_i + z(||A|| - alpha_i), z = (1 - x' - y')/(n - 2):
/// the additive rule whose unit problem 1^{ij} pays x' to the host, y' to
/// the visitor and z to every outsider.
inline Allocation additive_extension(const Problem& a, const Rational& xp, const Rational& yp) {
  const Rational n = detail::n_of(a);
  const Rational z = (1 - xp - yp) / (n - 2);
  const Rational total = a.total();
  Allocation out;
  out.shares.reserve(a.size());
  for (Team i = 1; i <= a.size(); ++i) {
    const Rational h = a.home(i);
    const Rational w = a.away(i);
    out.shares.push_back(xp * h + yp * w + z * (total - h - w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extended families: base(lambda) - |x' - y'| CD_i(A^{i0}) when x' >= y',
// CD_i(A^{0i}) otherwise.

namespace detail {

inline Allocation subtract_nullified_cd(Allocation base, const Problem& a, const Rational& xp,
                                        const Rational& yp) {
  const Rational gap = abs(Rational(xp - yp));
  if (gap == 0) return base;
  for (Team i = 1; i <= a.size(); ++i) {
    base.shares[i - 1] -= gap * (xp >= yp ? cd_home_nullified(a, i) : cd_away_nullified(a, i));
  }
  return base;
}

}  // namespace detail

inline Rational extended_ec_lambda(const Rational& xp, const Rational& yp) {
  return 2 - 2 * std::max(xp, yp);
}

inline Rational extended_uc_lambda(const Rational& xp, const Rational& yp, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  return nn * (1 - std::max(xp, yp)) / (nn - 1);
}

inline Rational extended_ue_lambda(const Rational& xp, const Rational& yp, std::size_t n) {
  const Rational nn(static_cast<long>(n));
  return nn * (1 - 2 * std::max(xp, yp)) / (nn - 2);
}

inline Allocation extended_ec(const Problem& a, const Rational& xp, const Rational& yp) {
  check_extended_ec(xp, yp);
  return detail::subtract_nullified_cd(ec(a, extended_ec_lambda(xp, yp)), a, xp, yp);
}

inline Allocation extended_uc(const Problem& a, const Rational& xp, const Rational& yp) {
  check_extended_uc(xp, yp, a.size());
  return detail::subtract_nullified_cd(uc(a, extended_uc_lambda(xp, yp, a.size())), a, xp, yp);
}

inline Allocation extended_ue(const Problem& a, const Rational& xp, const Rational& yp) {
  check_extended_ue(xp, yp, a.size());
  return detail::subtract_nullified_cd(ue(a, extended_ue_lambda(xp, yp, a.size())), a, xp, yp);
}

}  // namespace broadcast::family

#endif  // BROADCAST_FAMILIES_HPP
