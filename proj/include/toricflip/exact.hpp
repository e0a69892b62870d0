// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact integers, rationals and the small amount of number theory the
// rest of the library needs. Nothing here (or anywhere else in toricflip)
// touches floating point.

#include "toricflip/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace toricflip {

using BigInt = boost::multiprecision::cpp_int;
/// Always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt &v) { return v.str(); }

inline std::string to_string(const Rational &v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational make_rational(const BigInt &num, const BigInt &den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  return Rational(num, den);
}

inline BigInt abs(const BigInt &v) { return v < 0 ? BigInt(-v) : v; }

/// Parses an optionally signed decimal integer. Rejects anything else,
/// including empty strings and embedded whitespace.
inline std::optional<BigInt> parse_bigint(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  // Leading zeros would make the string constructor read octal.
  while (start + 1 < text.size() && text[start] == '0') ++start;
  BigInt value(std::string(text.substr(start)));
  return text[0] == '-' ? BigInt(-value) : value;
}

inline bool fits_int64(const BigInt &v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

/// Euclidean remainder: result lies in [0, |n|).
inline BigInt mod(const BigInt &a, const BigInt &n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "modulus zero");
  BigInt m = abs(n);
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Floor division for a signed numerator and nonzero denominator.
inline BigInt floor_div(const BigInt &a, const BigInt &b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt gcd(const BigInt &a, const BigInt &b) {
  BigInt x = abs(a), y = abs(b);
  while (y != 0) {
    BigInt t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

struct Bezout {
  BigInt g;
  BigInt x;
  BigInt y;
};

/// g = gcd(a, b) >= 0 with a*x + b*y = g. egcd(0, 0) = (0, 0, 0).
inline Bezout egcd(const BigInt &a, const BigInt &b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  if (old_r == 0) return {0, 0, 0};
  return {old_r, old_s, old_t};
}

/// Inverse of a modulo n in [0, n); NoSolution when gcd(a, n) != 1.
inline BigInt mod_inverse(const BigInt &a, const BigInt &n) {
  if (n <= 0) throw Error(ErrorCode::InvalidInput, "modulus must be positive");
  if (n == 1) return 0;
  Bezout b = egcd(mod(a, n), n);
  if (b.g != 1)
    throw Error(ErrorCode::NoSolution,
                to_string(a) + " is not invertible modulo " + to_string(n));
  return mod(b.x, n);
}

/// Smallest t in [0, n) with a*t = b (mod n).
inline BigInt solve_congruence(const BigInt &a, const BigInt &b,
                               const BigInt &n) {
  if (n <= 0) throw Error(ErrorCode::InvalidInput, "modulus must be positive");
  const BigInt g = gcd(mod(a, n), n);
  if (mod(b, g) != 0) {
    throw Error(ErrorCode::NoSolution,
                "gcd(" + to_string(a) + ", " + to_string(n) + ") does not divide " +
                    to_string(b));
  }
  const BigInt n_red = n / g;
  const BigInt a_red = mod(a, n) / g;
  const BigInt b_red = mod(b, n) / g;
  // Solutions form one class modulo n/g; its least member is the answer.
  return mod(b_red * mod_inverse(a_red, n_red), n_red);
}

/// Integer square root (floor) of a nonnegative value.
inline BigInt isqrt(const BigInt &v) {
  if (v < 0) throw Error(ErrorCode::InvalidInput, "isqrt of negative value");
  return boost::multiprecision::sqrt(v);
}

} // namespace toricflip
