// SPDX-License-Identifier: Apache-2.0
#pragma once

// Hirzebruch-Jung continued fractions m/q = b1 - 1/(b2 - 1/(... - 1/bs)).

#include "toricflip/exact.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

namespace toricflip {

using ChainEntries = std::vector<BigInt>;

/// A nonempty chain with every entry >= 2, i.e. the exceptional chain of
/// a minimal resolution.
class HJChain {
public:
  explicit HJChain(ChainEntries entries) : entries_(std::move(entries)) {
    if (entries_.empty())
      throw Error(ErrorCode::InvalidInput, "continued fraction must be nonempty");
    for (const auto &b : entries_)
      if (b < 2)
        throw Error(ErrorCode::InvalidInput,
                    "continued fraction entry " + b.str() + " is below 2");
  }

  const ChainEntries &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const BigInt &operator[](std::size_t i) const { return entries_[i]; }

  bool operator==(const HJChain &) const = default;

private:
  ChainEntries entries_;
};

/// Negative-continued-fraction value as a coprime pair.
struct Fraction {
  BigInt num; ///< the order (Delta)
  BigInt den; ///< the weight (Omega)
  bool operator==(const Fraction &) const = default;
};

/// Chain bracketed as "[b1,b2,...]"; the empty chain renders as "[]".
inline std::string format_chain(std::span<const BigInt> entries) {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += entries[i].str();
  }
  return out + "]";
}

inline std::string format_chain(const HJChain &chain) {
  return format_chain(chain.entries());
}

inline void require_cqs_pair(const BigInt &m, const BigInt &q) {
  if (m < 2 || q < 1 || q >= m)
    throw Error(ErrorCode::InvalidInput, "need 1 <= q < m, got m=" + m.str() +
                                             " q=" + q.str());
  if (gcd(m, q) != 1)
    throw Error(ErrorCode::InvalidInput,
                "gcd(" + m.str() + ", " + q.str() + ") != 1");
}

inline HJChain hj_expand(const BigInt &m, const BigInt &q) {
  require_cqs_pair(m, q);
  ChainEntries entries;
  BigInt num = m, den = q;
  while (den != 0) {
    // b = ceil(num / den); remainder num/den = b - den/(b*den - num).
    BigInt b = (num + den - 1) / den;
    BigInt next = b * den - num;
    entries.push_back(std::move(b));
    num = std::move(den);
    den = std::move(next);
  }
  return HJChain(std::move(entries));
}

/// Evaluates a chain whose entries may be as small as 1. Throws
/// DegenerateChain if a zero denominator shows up along the way.
inline Fraction hj_eval(std::span<const BigInt> entries) {
  if (entries.empty())
    throw Error(ErrorCode::InvalidInput, "cannot evaluate an empty chain");
  for (const auto &b : entries)
    if (b < 1)
      throw Error(ErrorCode::InvalidInput,
                  "chain entry " + b.str() + " is below 1");
  BigInt num = entries.back();
  BigInt den = 1;
  for (std::size_t i = entries.size() - 1; i-- > 0;) {
    if (num == 0)
      throw Error(ErrorCode::DegenerateChain,
                  "zero denominator while evaluating " + format_chain(entries));
    BigInt next = entries[i] * num - den;
    den = std::move(num);
    num = std::move(next);
  }
  if (num == 0)
    throw Error(ErrorCode::DegenerateChain,
                "chain " + format_chain(entries) + " evaluates to infinity");
  if (num < 0) {
    num = -num;
    den = -den;
  }
  return {std::move(num), std::move(den)};
}

inline Fraction hj_eval(const HJChain &chain) { return hj_eval(chain.entries()); }

/// The conjugate pair (m, m - q).
inline Fraction conjugate(const BigInt &m, const BigInt &q) {
  require_cqs_pair(m, q);
  return {m, m - q};
}

inline HJChain reverse(const HJChain &chain) {
  ChainEntries e = chain.entries();
  std::reverse(e.begin(), e.end());
  return HJChain(std::move(e));
}

/// A chain of curves around one marked curve of self-intersection `mark`,
/// e.g. [3]-(-5)-[2,2]. Either side may be empty.
struct MarkedChain {
  ChainEntries left;
  BigInt mark;
  ChainEntries right;

  MarkedChain(ChainEntries l, BigInt m, ChainEntries r)
      : left(std::move(l)), mark(std::move(m)), right(std::move(r)) {
    if (mark > -1)
      throw Error(ErrorCode::InvalidInput,
                  "marked curve must have self-intersection <= -1");
    for (const auto *side : {&left, &right})
      for (const auto &b : *side)
        if (b < 2)
          throw Error(ErrorCode::InvalidInput, "side chain entry below 2");
  }

  MarkedChain reversed() const {
    ChainEntries l(right.rbegin(), right.rend());
    ChainEntries r(left.rbegin(), left.rend());
    return MarkedChain(std::move(l), mark, std::move(r));
  }

  bool operator==(const MarkedChain &) const = default;
};

inline std::string format_marked(const MarkedChain &chain) {
  std::string out;
  if (!chain.left.empty()) out += format_chain(chain.left) + "-";
  out += "(" + chain.mark.str() + ")";
  if (!chain.right.empty()) out += "-" + format_chain(chain.right);
  return out;
}

} // namespace toricflip
