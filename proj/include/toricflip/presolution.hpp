// SPDX-License-Identifier: Apache-2.0
#pragma once

// Extremal P-resolutions X+ -> Y: a single exceptional curve C+ through at
// most two Wahl points. Encoded as (m1', a1', m2', a2', c) where -c is the
// self-intersection of C+ on the minimal resolution of X+.

#include "toricflip/contfrac.hpp"
#include "toricflip/singularities.hpp"

#include <string>

namespace toricflip {

struct ExtremalPRes {
  WahlData w1; ///< (m1', a1'); (1,1) when that end of C+ is a smooth point
  WahlData w2; ///< (m2', a2')
  BigInt c;

  const BigInt &m1() const { return w1.m; }
  const BigInt &a1() const { return w1.a; }
  const BigInt &m2() const { return w2.m; }
  const BigInt &a2() const { return w2.a; }

  std::string str() const {
    return "(" + w1.m.str() + "," + w1.a.str() + "," + w2.m.str() + "," +
           w2.a.str() + ",c=" + c.str() + ")";
  }
  bool operator==(const ExtremalPRes &) const = default;
};

inline BigInt delta(const ExtremalPRes &p) {
  return p.c * p.m1() * p.m2() - p.m1() * p.a2() - p.m2() * p.a1();
}

/// F = m1' + m2', the order of the second antiflip chart.
inline BigInt chart_order_f(const ExtremalPRes &p) { return p.m1() + p.m2(); }

/// Validating constructor: Wahl data (or the smooth marker) on each side,
/// c >= 1 and delta >= 1. Side order is kept as given.
inline ExtremalPRes make_presolution(const BigInt &m1, const BigInt &a1,
                                     const BigInt &m2, const BigInt &a2,
                                     const BigInt &c) {
  if (c < 1) throw Error(ErrorCode::InvalidInput, "c must be at least 1");
  ExtremalPRes p{make_wahl(m1, a1), make_wahl(m2, a2), c};
  if (delta(p) < 1)
    throw Error(ErrorCode::InvalidInput,
                p.str() + " has delta = " + delta(p).str() + " < 1");
  return p;
}

inline bool is_degree4_cone(const ExtremalPRes &p) {
  return p.w1.is_smooth() && p.w2.is_smooth() && p.c == 4;
}

/// The singularity Q in Y as [f_r2,...,f_1, c, e_1,...,e_r1].
struct AmbientSing {
  ChainEntries chain;
  BigInt big_delta; ///< Delta
  BigInt omega;     ///< Omega
};

inline AmbientSing ambient(const ExtremalPRes &p) {
  ChainEntries chain = wahl_entries(p.w2);
  std::reverse(chain.begin(), chain.end());
  chain.push_back(p.c);
  const ChainEntries right = wahl_entries(p.w1);
  chain.insert(chain.end(), right.begin(), right.end());
  Fraction value = hj_eval(chain);
  return {std::move(chain), std::move(value.num), std::move(value.den)};
}

enum class Delta2Kind { Smooth, OneSing, TwoSing };

constexpr std::string_view to_string(Delta2Kind k) {
  switch (k) {
  case Delta2Kind::Smooth: return "Smooth";
  case Delta2Kind::OneSing: return "OneSing";
  case Delta2Kind::TwoSing: return "TwoSing";
  }
  return "Unknown";
}

struct Delta2Case {
  Delta2Kind kind;
  /// OneSing only: the singular point is (2k+1, 2k-1).
  BigInt k = 0;
  /// OneSing only: which side (1 or 2) carries the singular point.
  int singular_side = 0;
};

/// The three shapes a delta = 2 extremal P-resolution can take. Also
/// checks that F is even; a failure there means the input was not a
/// genuine extremal P-resolution.
inline Delta2Case case_analysis_delta2(const ExtremalPRes &p) {
  if (delta(p) != 2)
    throw Error(ErrorCode::NotDelta2, p.str() + " has delta " + delta(p).str());
  if (chart_order_f(p) % 2 != 0)
    throw Error(ErrorCode::InternalInvariant, p.str() + " has odd F");
  const bool s1 = p.w1.is_smooth(), s2 = p.w2.is_smooth();
  if (s1 && s2) {
    if (p.c != 4) throw Error(ErrorCode::InternalInvariant, "smooth case needs c = 4");
    return {Delta2Kind::Smooth};
  }
  if (s1 || s2) {
    const WahlData &w = s1 ? p.w2 : p.w1;
    if (p.c != 2 || w.m - w.a != 2 || w.m % 2 == 0)
      throw Error(ErrorCode::InternalInvariant,
                  p.str() + " breaks the one-singularity shape");
    return {Delta2Kind::OneSing, (w.m - 1) / 2, s1 ? 2 : 1};
  }
  if (p.c != 1)
    throw Error(ErrorCode::InternalInvariant, "two singular points need c = 1");
  return {Delta2Kind::TwoSing};
}

/// (C+)^2 on X+: -c plus the Wahl-point corrections.
inline Rational cplus_self_intersection(const ExtremalPRes &p) {
  Rational value(-p.c);
  for (const WahlData *w : {&p.w1, &p.w2})
    value += Rational(w->m * w->a - 1, w->m * w->m);
  return value;
}

struct DiscrepancyData {
  Rational a;             ///< K_{X+} = pi^* K_Y + a C+
  Rational a2_cplus2;     ///< a^2 (C+)^2, equal to -4/F^2
};

inline DiscrepancyData discrepancy_data(const ExtremalPRes &p) {
  if (delta(p) != 2)
    throw Error(ErrorCode::NotDelta2, p.str() + " has delta " + delta(p).str());
  if (is_degree4_cone(p))
    throw Error(ErrorCode::ExcludedCase, "the degree 4 cone is handled separately");
  const BigInt f = chart_order_f(p);
  Rational a(-2 * p.m1() * p.m2(), f * f);
  return {a, a * a * cplus_self_intersection(p)};
}

/// Axial multiplicities of a one-parameter smoothing at the two ends of C+.
struct SmoothingParams {
  BigInt alpha1;
  BigInt alpha2;
};

inline bool in_canonical_region(const SmoothingParams &s, const BigInt &d) {
  if (s.alpha1 < 1 || s.alpha2 < 1)
    throw Error(ErrorCode::InvalidInput, "axial multiplicities must be positive");
  return s.alpha1 * s.alpha1 - d * s.alpha1 * s.alpha2 + s.alpha2 * s.alpha2 <= 0;
}

} // namespace toricflip
