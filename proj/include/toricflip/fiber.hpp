// SPDX-License-Identifier: Apache-2.0
#pragma once

// The special fiber X- of the antiflip family, and for delta = 2 the
// correspondence between extremal P-resolutions and pairs (f, p).

#include "toricflip/antiflip.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricflip {

namespace detail {

inline std::string power(const std::string &var, const BigInt &e) {
  if (e == 1) return var;
  return var + "^" + e.str();
}

inline std::string ambient_str(const ThreefoldCQS &t) {
  return "A^3/(1/" + t.r.str() + ")(" + t.w[0].str() + "," + t.w[1].str() +
         "," + t.w[2].str() + ")";
}

} // namespace detail

struct ChartEquations {
  std::string s1;
  std::string s2;
  std::string gluing;
};

/// The two components S1, S2 of X- in the charts W1, W2 and how they glue.
inline ChartEquations chart_equations(const AntiflipCharts &charts) {
  if (charts.delta < 2)
    throw Error(ErrorCode::DeltaTooSmall, "chart equations need delta >= 2");
  using detail::power;
  const BigInt &d = charts.delta;
  const BigInt m1p = charts.fan.w[3][0];
  const BigInt m2p = -charts.fan.w[4][0];
  ChartEquations out;
  out.s1 = "X1·Y1·Z1 = " + power("Y1", d) + " + " + power("Z1", d) + " in " +
           detail::ambient_str(charts.w1);
  out.s2 = "Y2·Z2 = " + power("X2", m1p) + "·" + power("Z2", d) + " + " +
           power("X2", m2p) + "·" + power("Y2", d) + " in " +
           detail::ambient_str(charts.w2);
  out.gluing = power("X1", d) + " = " + power("X2", -charts.f) + ", " +
               power("Y1", d) + " = " + power("X2", m2p) + "·" + power("Y2", d) +
               ", " + power("Z1", d) + " = " + power("X2", m1p) + "·" +
               power("Z2", d);
  return out;
}

/// Normalization of the local cover T1 of the W1 chart, delta >= 3.
inline SurfaceCQS t1_normalization(const BigInt &d) {
  if (d < 3) throw Error(ErrorCode::DeltaTooSmall, "need delta >= 3");
  return normalize_surface({d * (d - 2), 1, (d - 2) * (d - 1) - 1});
}

/// The singularity of the normalization of S1 at the W1 point, delta >= 3.
///
/// With d = gcd(rho+1, delta), j = delta/d and h = (rho+1)/d, t solves
/// t h = rho mod j and the germ is 1/n(1, n - t j (delta-2) - (delta-1))
/// for n = j^2 (delta-2). For d = 1 this is the order delta^2 (delta-2)
/// form; for d > 1 the congruence lives modulo j, not delta.
inline SurfaceCQS s1_normalization(const BigInt &d, const BigInt &rho) {
  if (d < 3) throw Error(ErrorCode::DeltaTooSmall, "need delta >= 3");
  if (rho < 0 || rho >= d)
    throw Error(ErrorCode::InvalidInput, "rho must lie in [0, delta)");
  const BigInt g = gcd(rho + 1, d);
  const BigInt j = d / g, h = (rho + 1) / g;
  const BigInt t = solve_congruence(h, rho, j);
  const BigInt n = j * j * (d - 2);
  const BigInt q = mod(n - t * j * (d - 2) - (d - 1), n);
  if (gcd(q, n) != 1)
    throw Error(ErrorCode::InternalInvariant,
                "S1 normalization weight is not a unit for delta=" + d.str() +
                    " rho=" + rho.str());
  return normalize_surface({n, 1, q});
}

// ---------------------------------------------------------------------------
// delta = 2: pairs (f, p)

struct FPPair {
  BigInt f;
  BigInt p;
  std::string str() const { return "(" + f.str() + "," + p.str() + ")"; }
  bool operator==(const FPPair &) const = default;
};

inline bool is_canonical_fp(const FPPair &fp) {
  return fp.f >= 2 && fp.p >= 1 && 2 * fp.p <= fp.f && gcd(fp.p, fp.f) == 1;
}

inline FPPair fp_of(const ExtremalPRes &p, const AntiflipCharts &charts) {
  if (delta(p) != 2)
    throw Error(ErrorCode::NotDelta2, p.str() + " has delta " + delta(p).str());
  if (is_degree4_cone(p))
    throw Error(ErrorCode::ExcludedCase, "the degree 4 cone has no (f,p) pair");
  const Delta2Case kind = case_analysis_delta2(p);
  const BigInt lam = mod(charts.lambda, charts.f);
  if (kind.kind == Delta2Kind::OneSing && lam != 2)
    throw Error(ErrorCode::InternalInvariant, "one singular point needs lambda = 2");
  if (lam % 2 != 0)
    throw Error(ErrorCode::InternalInvariant, "lambda is odd for " + p.str());
  FPPair out{charts.f / 2, lam / 2};
  if (2 * out.p > out.f) out.p = out.f - out.p;
  if (!is_canonical_fp(out))
    throw Error(ErrorCode::InternalInvariant,
                p.str() + " gives the invalid pair " + out.str());
  return out;
}

inline FPPair fp_of(const ExtremalPRes &p) {
  if (delta(p) != 2)
    throw Error(ErrorCode::NotDelta2, p.str() + " has delta " + delta(p).str());
  if (is_degree4_cone(p))
    throw Error(ErrorCode::ExcludedCase, "the degree 4 cone has no (f,p) pair");
  return fp_of(p, antiflip_charts(p));
}

namespace detail {

inline ExtremalPRes assemble_delta2(BigInt m1, BigInt a1, BigInt m2, BigInt a2) {
  // A side with m' = 1 is a smooth point of X+.
  if (m1 == 1) a1 = 1;
  if (m2 == 1) a2 = 1;
  const BigInt c = (m1 == 1 || m2 == 1) ? 2 : 1;
  ExtremalPRes out = make_presolution(m1, a1, m2, a2, c);
  if (delta(out) != 2)
    throw Error(ErrorCode::InternalInvariant, out.str() + " does not have delta 2");
  return out;
}

} // namespace detail

/// Both delta = 2 extremal P-resolutions attached to 1/f(p,1) and
/// 1/f(p,-1), for any coprime 1 <= p < f. Order: the one solving
/// m1' p - a1' f = 1 first, then the one solving q f - m2' p = 1.
inline std::pair<ExtremalPRes, ExtremalPRes> construct_presolutions(const BigInt &f,
                                                                    const BigInt &p) {
  if (f < 2 || p < 1 || p >= f || gcd(p, f) != 1)
    throw Error(ErrorCode::InvalidFP, "need coprime 1 <= p < f, got " +
                                          FPPair{f, p}.str());
  const BigInt inv = mod_inverse(p, f);

  const BigInt m1 = inv;
  const BigInt a1 = (m1 * p - 1) / f;
  const BigInt m2 = 2 * f - m1;
  const BigInt a2 = m2 + a1 - 2 * p;
  ExtremalPRes first = detail::assemble_delta2(m1, a1, m2, a2);

  const BigInt n2 = mod(-inv, f);
  const BigInt q = (1 + n2 * p) / f;
  const BigInt b2 = n2 - q;
  const BigInt n1 = 2 * f - n2;
  const BigInt b1 = 2 * p - q;
  ExtremalPRes second = detail::assemble_delta2(n1, b1, n2, b2);
  return {std::move(first), std::move(second)};
}

inline std::pair<ExtremalPRes, ExtremalPRes> presolutions_of(const FPPair &fp) {
  if (!is_canonical_fp(fp))
    throw Error(ErrorCode::InvalidFP,
                fp.str() + " needs 1 <= p <= f/2 and gcd(p,f) = 1");
  return construct_presolutions(fp.f, fp.p);
}

/// [f/p]-(-5)-reverse([f/(f-p)]): the chain over the curve C in the
/// minimal resolution of the normalization of X-.
inline MarkedChain xnu_chain(const FPPair &fp) {
  if (!is_canonical_fp(fp))
    throw Error(ErrorCode::InvalidFP,
                fp.str() + " needs 1 <= p <= f/2 and gcd(p,f) = 1");
  ChainEntries right = hj_expand(fp.f, fp.f - fp.p).entries();
  std::reverse(right.begin(), right.end());
  return MarkedChain(hj_expand(fp.f, fp.p).entries(), -5, std::move(right));
}

/// Minimal resolution of X+ around C+: Wahl chain of (m2',a2') reversed,
/// the curve C+ itself, then the Wahl chain of (m1',a1').
inline MarkedChain xplus_chain(const ExtremalPRes &p) {
  ChainEntries left = wahl_entries(p.w2);
  std::reverse(left.begin(), left.end());
  return MarkedChain(std::move(left), -p.c, wahl_entries(p.w1));
}

struct TableRow {
  FPPair fp;
  MarkedChain xplus_1;
  MarkedChain xplus_2;
  MarkedChain xnu;
};

/// Row for one pair; the two X+ columns are ordered by their display strings.
inline TableRow table_row(const FPPair &fp) {
  const auto [a, b] = presolutions_of(fp);
  MarkedChain x1 = xplus_chain(a), x2 = xplus_chain(b);
  if (format_marked(x2) < format_marked(x1)) std::swap(x1, x2);
  return {fp, std::move(x1), std::move(x2), xnu_chain(fp)};
}

inline std::vector<TableRow> table_rows(const BigInt &f_max) {
  if (f_max < 2) throw Error(ErrorCode::InvalidInput, "f_max must be at least 2");
  std::vector<TableRow> rows;
  for (BigInt f = 2; f <= f_max; ++f)
    for (BigInt p = 1; 2 * p <= f; ++p)
      if (gcd(p, f) == 1) rows.push_back(table_row({f, p}));
  return rows;
}

inline std::string format_row(const TableRow &row) {
  return "f=" + row.fp.f.str() + " p=" + row.fp.p.str() + " | " +
         format_marked(row.xplus_1) + " | " + format_marked(row.xplus_2) + " | " +
         format_marked(row.xnu);
}

// ---------------------------------------------------------------------------
// Special fiber report

struct FiberDescription {
  BigInt delta;
  std::string transversal_slice; ///< singularity of a slice transversal to C-
  std::string local_eq_w1;
  ONCData onc; ///< the W2 point
  std::optional<SurfaceCQS> t1nu;
  std::optional<SurfaceCQS> s1nu;
  /// delta >= 3: [a], [c], [b] of [a]-(-1)-[c]-(-1)-[b]
  std::optional<std::array<ChainEntries, 3>> chain3;
  /// delta = 2: the chain over C with C^2 = -5
  std::optional<MarkedChain> xnu;
  std::optional<FPPair> fp;
  bool normalization_smooth = false;
  int pinch_points = 0;
  std::vector<std::string> notes;

  std::string chain_str() const {
    if (chain3) {
      std::string out;
      for (std::size_t i = 0; i < 3; ++i) {
        if (i) out += "-(-1)-";
        out += format_chain((*chain3)[i]);
      }
      return out;
    }
    if (xnu) return format_marked(*xnu);
    if (normalization_smooth) return "(-4)";
    return "";
  }
};

inline FiberDescription fiber_description(const ExtremalPRes &p,
                                          const AntiflipCharts &charts) {
  const BigInt &d = charts.delta;
  if (d < 2) throw Error(ErrorCode::DeltaTooSmall, "need delta >= 2");
  FiberDescription out;
  out.delta = d;
  out.transversal_slice = "A_" + BigInt(d - 1).str();
  out.local_eq_w1 = "(XYZ=Y^" + d.str() + "+Z^" + d.str() + ") ⊂ 1/" + d.str() +
                    "(" + charts.w1.w[0].str() + "," + charts.w1.w[1].str() + "," +
                    charts.w1.w[2].str() + ")";
  out.onc = onc_from_threefold(charts.w2);

  if (d >= 3) {
    out.t1nu = t1_normalization(d);
    out.s1nu = s1_normalization(d, charts.rho);
    ChainEntries a = resolution_entries(out.onc.first);
    std::reverse(a.begin(), a.end());
    out.chain3 = std::array<ChainEntries, 3>{std::move(a), resolution_entries(*out.s1nu),
                                             resolution_entries(out.onc.second)};
    out.notes.push_back("the two (-1)-curves fold onto C-, meeting at the ONC point W2");
    out.notes.push_back("[c] resolves the normalization at the non-terminal point W1");
    return out;
  }

  out.pinch_points = 2;
  if (is_degree4_cone(p)) {
    out.normalization_smooth = true;
    out.notes.push_back("normalization is smooth and isomorphic to X+");
    return out;
  }
  out.fp = fp_of(p, charts);
  out.xnu = xnu_chain(*out.fp);
  out.notes.push_back("normalization branches are 1/f(p,1) and 1/f(p,-1)");
  return out;
}

inline FiberDescription fiber_description(const ExtremalPRes &p) {
  return fiber_description(p, antiflip_charts(p));
}

} // namespace toricflip
