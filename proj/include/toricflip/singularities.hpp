// SPDX-License-Identifier: Apache-2.0
#pragma once

// Cyclic quotient singularities of surfaces and threefolds.

#include "toricflip/contfrac.hpp"
#include "toricflip/exact.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

namespace toricflip {

/// 1/m(q1, q2): C^2 modulo x -> mu x, y -> mu^q y style diagonal actions.
/// m = 1 is the smooth point and is always stored as 1/1(1,1).
struct SurfaceCQS {
  BigInt m;
  BigInt q1;
  BigInt q2;

  bool is_smooth() const { return m == 1; }
  bool is_normalized() const {
    return is_smooth() ? (q1 == 1 && q2 == 1) : (q1 == 1 && q2 >= 1 && q2 < m);
  }
  std::string str() const {
    return "1/" + m.str() + "(" + q1.str() + "," + q2.str() + ")";
  }
  bool operator==(const SurfaceCQS &) const = default;
};

inline SurfaceCQS smooth_surface() { return {1, 1, 1}; }

/// Checked constructor. Weights are reduced into [0, m).
inline SurfaceCQS make_surface(const BigInt &m, const BigInt &q1,
                               const BigInt &q2) {
  if (m < 1) throw Error(ErrorCode::NotWellFormed, "order must be positive");
  if (m == 1) return smooth_surface();
  if (gcd(m, q1) != 1 || gcd(m, q2) != 1)
    throw Error(ErrorCode::NotWellFormed,
                "1/" + m.str() + "(" + q1.str() + "," + q2.str() +
                    ") has a weight sharing a factor with the order");
  return {m, mod(q1, m), mod(q2, m)};
}

inline SurfaceCQS normalize_surface(const SurfaceCQS &s) {
  SurfaceCQS checked = make_surface(s.m, s.q1, s.q2);
  if (checked.is_smooth()) return checked;
  const BigInt inv = mod_inverse(checked.q1, checked.m);
  return {checked.m, 1, mod(checked.q2 * inv, checked.m)};
}

/// Whether two surface germs are isomorphic: 1/m(1,q) ~ 1/m(1,q^-1).
inline bool same_germ(const SurfaceCQS &a, const SurfaceCQS &b) {
  const SurfaceCQS x = normalize_surface(a), y = normalize_surface(b);
  if (x.m != y.m) return false;
  if (x.is_smooth()) return true;
  return x.q2 == y.q2 || mod(x.q2 * y.q2, x.m) == 1;
}

/// Quotient of C^2 by the cyclic group of order r acting with weights
/// (a, b), where the weights may share factors with r. The kernel of the
/// action is discarded and the reflections are quotiented out first, so
/// the result is the normalized cyclic quotient that the germ really is.
inline SurfaceCQS effective_surface(const BigInt &r, const BigInt &a,
                                    const BigInt &b) {
  if (r < 1) throw Error(ErrorCode::NotWellFormed, "order must be positive");
  const BigInt g = gcd(gcd(r, a), b);
  const BigInt order = r / g;
  if (order == 1) return smooth_surface();
  const BigInt wa = mod(a / g, order), wb = mod(b / g, order);
  // Elements killing a weight act as reflections in the other coordinate.
  const BigInt fix_x = gcd(wa, order);
  const BigInt fix_y = gcd(wb, order);
  const BigInt n = order / (fix_x * fix_y);
  if (n == 1) return smooth_surface();
  return normalize_surface({n, mod(wa / fix_x, n), mod(wb / fix_y, n)});
}

inline HJChain min_resolution(const SurfaceCQS &s) {
  const SurfaceCQS n = normalize_surface(s);
  if (n.is_smooth()) throw Error(ErrorCode::SmoothPoint, "1/1 has no resolution chain");
  return hj_expand(n.m, n.q2);
}

/// Resolution chain, or the empty chain at a smooth point.
inline ChainEntries resolution_entries(const SurfaceCQS &s) {
  const SurfaceCQS n = normalize_surface(s);
  if (n.is_smooth()) return {};
  return hj_expand(n.m, n.q2).entries();
}

// ---------------------------------------------------------------------------
// Wahl singularities 1/m^2(1, ma - 1)

struct WahlData {
  BigInt m;
  BigInt a;

  bool is_smooth() const { return m == 1; }
  bool operator==(const WahlData &) const = default;
};

inline WahlData make_wahl(const BigInt &m, const BigInt &a) {
  if (m == 1 && a == 1) return {1, 1};
  if (m < 2 || a < 1 || a >= m || gcd(m, a) != 1)
    throw Error(ErrorCode::InvalidInput, "(" + m.str() + "," + a.str() +
                                             ") is not valid Wahl data");
  return {m, a};
}

inline SurfaceCQS wahl_surface(const WahlData &w) {
  if (w.is_smooth()) return smooth_surface();
  return make_surface(w.m * w.m, 1, w.m * w.a - 1);
}

inline HJChain wahl_chain(const WahlData &w) {
  const WahlData v = make_wahl(w.m, w.a);
  if (v.is_smooth()) throw Error(ErrorCode::SmoothPoint, "smooth Wahl marker");
  return hj_expand(v.m * v.m, v.m * v.a - 1);
}

inline ChainEntries wahl_entries(const WahlData &w) {
  if (w.is_smooth()) return {};
  return wahl_chain(w).entries();
}

inline std::optional<WahlData> recognize_wahl(const HJChain &chain) {
  const Fraction f = hj_eval(chain);
  const BigInt m = isqrt(f.num);
  if (m < 2 || m * m != f.num) return std::nullopt;
  if ((f.den + 1) % m != 0) return std::nullopt;
  const BigInt a = (f.den + 1) / m;
  if (a < 1 || a >= m || gcd(m, a) != 1) return std::nullopt;
  return WahlData{m, a};
}

// ---------------------------------------------------------------------------
// Threefold quotients 1/r(w1, w2, w3)

struct ThreefoldCQS {
  BigInt r;
  std::array<BigInt, 3> w;

  std::string str() const {
    return "1/" + r.str() + "(" + w[0].str() + "," + w[1].str() + "," +
           w[2].str() + ")";
  }
  bool operator==(const ThreefoldCQS &) const = default;
};

inline ThreefoldCQS make_threefold(const BigInt &r, const BigInt &w1,
                                   const BigInt &w2, const BigInt &w3) {
  if (r < 1) throw Error(ErrorCode::InvalidInput, "order must be positive");
  return {r, {mod(w1, r), mod(w2, r), mod(w3, r)}};
}

/// Same weights up to multiplication by a unit modulo r (a change of
/// generator of the group), coordinates kept in place.
inline bool equivalent_up_to_unit(const ThreefoldCQS &a, const ThreefoldCQS &b) {
  if (a.r != b.r) return false;
  for (BigInt u = 1; u <= a.r; ++u) {
    if (gcd(u, a.r) != 1) continue;
    bool all = true;
    for (std::size_t i = 0; i < 3 && all; ++i)
      all = mod(u * a.w[i], a.r) == b.w[i];
    if (all) return true;
  }
  return false;
}

/// Isomorphism of quotient germs up to unit scaling and permutation of the
/// coordinates. Exhaustive search, so only for small orders.
inline bool threefold_isomorphic(const ThreefoldCQS &a, const ThreefoldCQS &b) {
  if (a.r != b.r) return false;
  if (a.r > 200)
    throw Error(ErrorCode::InvalidInput, "isomorphism search limited to r <= 200");
  std::array<std::size_t, 3> perm{0, 1, 2};
  do {
    ThreefoldCQS p{a.r, {a.w[perm[0]], a.w[perm[1]], a.w[perm[2]]}};
    if (equivalent_up_to_unit(p, b)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

enum class ReidTai { Terminal, CanonicalNotTerminal, NotCanonical };

constexpr std::string_view to_string(ReidTai k) {
  switch (k) {
  case ReidTai::Terminal: return "Terminal";
  case ReidTai::CanonicalNotTerminal: return "CanonicalNotTerminal";
  case ReidTai::NotCanonical: return "NotCanonical";
  }
  return "Unknown";
}

struct ReidTaiResult {
  ReidTai kind;
  /// Some nontrivial element fixes a coordinate axis, so the singular
  /// locus is a curve and the criterion is applied outside its usual
  /// isolated-singularity hypothesis.
  bool non_isolated;
  /// Least age over the nontrivial group elements (r = 1 reports 0).
  Rational min_age;
};

/// Reid-Tai criterion by summing fractional parts over every nontrivial
/// element. Rejects actions with a pseudo-reflection (an element fixing a
/// divisor), where the age test says nothing about the quotient.
inline ReidTaiResult reid_tai_classify(const ThreefoldCQS &t) {
  const ThreefoldCQS c = make_threefold(t.r, t.w[0], t.w[1], t.w[2]);
  if (c.r == 1) return {ReidTai::Terminal, false, Rational(0)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = i + 1; k < 3; ++k)
      if (gcd(gcd(c.r, c.w[i]), c.w[k]) != 1)
        throw Error(ErrorCode::NotIsolatedAction,
                    c.str() + " contains an element fixing a divisor");
  bool non_isolated = false;
  for (const auto &w : c.w) non_isolated = non_isolated || gcd(c.r, w) != 1;

  BigInt min_sum = -1;
  for (BigInt j = 1; j < c.r; ++j) {
    BigInt sum = 0;
    for (const auto &w : c.w) sum += mod(j * w, c.r);
    if (min_sum < 0 || sum < min_sum) min_sum = sum;
  }
  ReidTai kind = min_sum > c.r    ? ReidTai::Terminal
                 : min_sum == c.r ? ReidTai::CanonicalNotTerminal
                                  : ReidTai::NotCanonical;
  return {kind, non_isolated, Rational(min_sum, c.r)};
}

// ---------------------------------------------------------------------------
// Orbifold normal crossings (YZ = 0) in C^3 / 1/r(w1, w2, -w2)

struct ONCData {
  ThreefoldCQS ambient;
  BigInt m;          ///< order of the branch singularities after reduction
  BigInt a;          ///< branches are 1/m(1,a) and 1/m(1,-a)
  SurfaceCQS first;  ///< the Z = 0 branch, coordinates (X, Y)
  SurfaceCQS second; ///< the Y = 0 branch, coordinates (X, Z)
};

inline ONCData onc_from_threefold(const ThreefoldCQS &t) {
  const ThreefoldCQS c = make_threefold(t.r, t.w[0], t.w[1], t.w[2]);
  if (mod(c.w[1] + c.w[2], c.r) != 0 || gcd(c.w[1], c.r) != 1)
    throw Error(ErrorCode::NotONCForm,
                c.str() + " does not have opposite unit weights on Y and Z");
  SurfaceCQS first = effective_surface(c.r, c.w[0], c.w[1]);
  SurfaceCQS second = effective_surface(c.r, c.w[0], c.w[2]);
  if (first.m != second.m)
    throw Error(ErrorCode::InternalInvariant, "ONC branch orders differ");
  const BigInt a = first.is_smooth() ? BigInt(1) : first.q2;
  return {c, first.m, a, first, second};
}

} // namespace toricflip
