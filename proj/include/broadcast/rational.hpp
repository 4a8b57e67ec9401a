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

#ifndef BROADCAST_RATIONAL_HPP
#define BROADCAST_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "broadcast/error.hpp"

namespace broadcast {

/// Exact arbitrary-precision rational. All audiences and shares use it.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline mpz_class pow10(unsigned long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return p;
}

}  // namespace detail

/// Parses "p/q", integers and decimal strings ("-12.5", "1e3", "2.5E-1")
/// without any rounding.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw fail();

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) throw fail();
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_part = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      if (!detail::all_digits(exp_part) || exp_part.size() > 6) throw fail();
      exponent = std::stol(std::string(exp_part));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw fail();
    if (!int_part.empty() && !detail::all_digits(int_part)) throw fail();
    if (!frac_part.empty() && !detail::all_digits(frac_part)) throw fail();
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
    long scale = static_cast<long>(frac_part.size()) - exponent;
    if (scale >= 0) {
      value = Rational(mantissa, detail::pow10(static_cast<unsigned long>(scale)));
    } else {
      value = Rational(mantissa * detail::pow10(static_cast<unsigned long>(-scale)));
    }
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

/// Lossless "p/q" form ("p" for integers).
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Shortest exact decimal when the expansion terminates, "p/q" otherwise.
inline std::string to_decimal(const Rational& r) {
  mpz_class den = r.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return to_string(r);

  const unsigned long places = twos > fives ? twos : fives;
  if (places == 0) return r.get_num().get_str();
  mpz_class scaled = r.get_num() * detail::pow10(places) / r.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

/// Rounds half away from zero to a fixed number of decimal places.
inline std::string to_fixed(const Rational& r, unsigned places) {
  const mpz_class scale = detail::pow10(places);
  Rational scaled = abs(r) * scale;
  mpz_class q = scaled.get_num() / scaled.get_den();
  mpz_class rem = scaled.get_num() - q * scaled.get_den();
  if (2 * rem >= scaled.get_den()) q += 1;
  std::string digits = q.get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  const bool negative = r < 0 && q != 0;
  return negative ? "-" + digits : digits;
}

}  // namespace broadcast

#endif  // BROADCAST_RATIONAL_HPP
