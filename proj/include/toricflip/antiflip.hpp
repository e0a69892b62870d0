// SPDX-License-Identifier: Apache-2.0
#pragma once

// Toric description of the diagonal smoothing of an extremal P-resolution
// and of its antiflip. Lattice N = Z^3 with w1, w2, w3 the standard basis;
//
//   w4 = m1' w1 + w2 - c(k-1) w3,   w5 = -m2' w1 + w2 - c(k) w3.
//
// X+ is the fan {<w2,w3,w4>, <w2,w3,w5>}, Y the cone <w2,w3,w4,w5>, and the
// antiflip X- the other subdivision {<w2,w4,w5>, <w3,w4,w5>} with charts
// W1 = 1/delta(-rho-1, rho, 1) and W2 = 1/F(lambda, 1, -1).

#include "toricflip/int_matrix.hpp"
#include "toricflip/presolution.hpp"
#include "toricflip/singularities.hpp"

#include <array>
#include <optional>
#include <vector>

namespace toricflip {

/// The k2A neighborhood (m1, a1, m2, a2) whose flip is X+.
struct InitialNeighborhood {
  BigInt m1;
  BigInt a1;
  BigInt m2;
  BigInt a2;
  bool operator==(const InitialNeighborhood &) const = default;
};

inline InitialNeighborhood initial_neighborhood(const ExtremalPRes &p) {
  const BigInt d = delta(p);
  if (d < 1) throw Error(ErrorCode::InvalidInput, "delta must be at least 1");
  InitialNeighborhood n;
  n.m2 = p.m1();
  n.a2 = p.m1() != p.a1() ? BigInt(p.m1() - p.a1()) : BigInt(1);
  n.m1 = d * p.m1() + p.m2();
  const BigInt numer = d + n.m1 * n.m2 - n.a2 * n.m1;
  if (numer % n.m2 != 0)
    throw Error(ErrorCode::NonIntegralA1,
                "a1 = " + numer.str() + "/" + n.m2.str() + " for " + p.str());
  n.a1 = numer / n.m2;
  return n;
}

struct MoriData {
  InitialNeighborhood init;
  BigInt delta;
  std::vector<BigInt> d_seq; ///< d(1), ..., d(k)
  std::vector<BigInt> c_seq; ///< c(1), ..., c(k+2)
  int k = 0;

  /// 1-based access matching the usual indexing of the sequences.
  const BigInt &d(int i) const { return d_seq.at(static_cast<std::size_t>(i - 1)); }
  const BigInt &c(int i) const { return c_seq.at(static_cast<std::size_t>(i - 1)); }
};

inline constexpr int kMoriIterationBound = 10000;

inline MoriData mori_sequences(const ExtremalPRes &p) {
  MoriData out;
  out.init = initial_neighborhood(p);
  out.delta = delta(p);
  const BigInt &dl = out.delta;

  out.d_seq = {out.init.m1, out.init.m2};
  while (out.d_seq.back() > 0) {
    if (static_cast<int>(out.d_seq.size()) >= kMoriIterationBound)
      throw Error(ErrorCode::NoTermination,
                  "d sequence stays positive for " + p.str());
    const std::size_t n = out.d_seq.size();
    out.d_seq.push_back(dl * out.d_seq[n - 1] - out.d_seq[n - 2]);
  }
  out.k = static_cast<int>(out.d_seq.size());

  out.c_seq = {out.init.a1, out.init.m2 - out.init.a2};
  for (int i = 2; i <= out.k - 1; ++i)
    out.c_seq.push_back(dl * out.c(i) - out.c(i - 1));
  out.c_seq.push_back(-out.c(out.k - 1));
  out.c_seq.push_back(-out.c(out.k));
  return out;
}

using LatticeVector = std::array<BigInt, 3>;

inline BigInt det3(const LatticeVector &a, const LatticeVector &b,
                   const LatticeVector &c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

struct FanData {
  std::array<LatticeVector, 5> w; ///< w[0] = w1, ..., w[4] = w5
  using Cone = std::array<std::size_t, 3>;
  static constexpr Cone sigma1{1, 2, 3}; ///< <w2, w3, w4>, X+
  static constexpr Cone sigma2{1, 2, 4}; ///< <w2, w3, w5>, X+
  static constexpr Cone sigma3{1, 3, 4}; ///< <w2, w4, w5>, X- chart W1
  static constexpr Cone sigma4{2, 3, 4}; ///< <w3, w4, w5>, X- chart W2
  static constexpr std::array<std::size_t, 4> y_cone{1, 2, 3, 4};

  BigInt cone_det(const Cone &c) const { return det3(w[c[0]], w[c[1]], w[c[2]]); }
};

inline FanData build_fans(const ExtremalPRes &p, const MoriData &mori) {
  const int k = mori.k;
  FanData fan;
  fan.w[0] = {1, 0, 0};
  fan.w[1] = {0, 1, 0};
  fan.w[2] = {0, 0, 1};
  fan.w[3] = {p.m1(), 1, -mori.c(k - 1)};
  fan.w[4] = {-p.m2(), 1, -mori.c(k)};
  return fan;
}

inline FanData build_fans(const ExtremalPRes &p) { return build_fans(p, mori_sequences(p)); }

/// Both subdivisions of the four-ray cone are valid triangulations of the
/// same support: the diagonals <w2,w3> and <w4,w5> of the quadrilateral
/// cross, which is what opposite orientation signs on each side express.
inline bool subdivisions_share_support(const FanData &fan) {
  const auto &w = fan.w;
  const BigInt s4 = det3(w[1], w[2], w[3]), s5 = det3(w[1], w[2], w[4]);
  const BigInt t2 = det3(w[3], w[4], w[1]), t3 = det3(w[3], w[4], w[2]);
  return s4 * s5 < 0 && t2 * t3 < 0;
}

struct AntiflipCharts {
  BigInt delta;
  BigInt rho;    ///< in [0, delta)
  BigInt lambda; ///< c(k-1) - c(k), not reduced
  BigInt f;      ///< m1' + m2'
  ThreefoldCQS w1;
  ThreefoldCQS w2;
  /// (r, s) with r m1' - s c(k-1) = 1; absent on the Smith-form route.
  std::optional<std::array<BigInt, 2>> bezout;
  MoriData mori;
  FanData fan;
};

/// rho = r m2' + s c(k) mod delta for a given Bezout pair.
inline BigInt rho_from_bezout(const ExtremalPRes &p, const MoriData &mori,
                              const BigInt &r, const BigInt &s) {
  return mod(r * p.m2() + s * mori.c(mori.k), mori.delta);
}

inline AntiflipCharts antiflip_charts(const ExtremalPRes &p) {
  const BigInt d = delta(p);
  if (d < 2)
    throw Error(ErrorCode::DeltaTooSmall,
                "antiflip charts need delta >= 2, got " + d.str());
  MoriData mori = mori_sequences(p);
  const int k = mori.k;
  const BigInt &ck1 = mori.c(k - 1);
  const BigInt &ck = mori.c(k);
  if (-(p.m1() * ck + p.m2() * ck1) != d)
    throw Error(ErrorCode::InternalInvariant, "delta identity fails for " + p.str());

  const Bezout b = egcd(p.m1(), -ck1);
  if (b.g != 1)
    throw Error(ErrorCode::InternalInvariant,
                "gcd(m1', c(k-1)) != 1 for " + p.str());
  AntiflipCharts out;
  out.delta = d;
  out.bezout = std::array<BigInt, 2>{b.x, b.y};
  out.rho = rho_from_bezout(p, mori, b.x, b.y);
  out.lambda = ck1 - ck;
  out.f = chart_order_f(p);
  out.w1 = make_threefold(d, -out.rho - 1, out.rho, 1);
  out.w2 = make_threefold(out.f, out.lambda, 1, -1);
  out.fan = build_fans(p, mori);
  out.mori = std::move(mori);
  return out;
}

/// One antiflip chart computed from a Smith normal form.
struct SnfChart {
  IntMatrix relation; ///< cone generators in the permuted basis
  SmithForm smith;
  LatticeVector generator; ///< generates N / N' (standard coordinates)
  ThreefoldCQS chart;
};

namespace detail {

// `relation` lists the cone generators in the coordinates given by `basis`
// (indices into w1..w3); `rays` are the same generators in N.
inline SnfChart chart_from_smith(IntMatrix relation,
                                 const std::array<std::size_t, 3> &basis,
                                 const std::array<LatticeVector, 3> &rays) {
  SmithForm smith = smith_normal_form(relation);
  if (smith.d(0, 0) != 1 || smith.d(1, 1) != 1)
    throw Error(ErrorCode::InternalInvariant,
                "quotient group is not cyclic: " + smith.d.str());
  const BigInt order = smith.d(2, 2);

  const std::vector<Rational> x = solve_row(smith.v, {0, 0, 1});
  LatticeVector gen{0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i) {
    if (boost::multiprecision::denominator(x[i]) != 1)
      throw Error(ErrorCode::InternalInvariant, "V is not unimodular");
    gen[basis[i]] = boost::multiprecision::numerator(x[i]);
  }

  IntMatrix ray_matrix(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) ray_matrix(i, j) = rays[i][j];
  const std::vector<Rational> coeff =
      solve_row(ray_matrix, {gen[0], gen[1], gen[2]});
  std::array<BigInt, 3> weights;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational scaled = coeff[i] * order;
    if (boost::multiprecision::denominator(scaled) != 1)
      throw Error(ErrorCode::InternalInvariant, "weight is not integral");
    weights[i] = boost::multiprecision::numerator(scaled);
  }
  ThreefoldCQS chart = make_threefold(order, weights[0], weights[1], weights[2]);
  return {std::move(relation), std::move(smith), gen, std::move(chart)};
}

} // namespace detail

struct SnfCharts {
  SnfChart g; ///< N / <w2, w4, w5>, order delta
  SnfChart h; ///< N / <w3, w4, w5>, order F
  AntiflipCharts charts;
};

/// Independent route to the antiflip charts: the quotient groups come from
/// Smith normal forms of the cone generators, and the weights from the
/// generator's coordinates in the ray basis. rho and lambda are read off
/// after rescaling the generator so the last (resp. middle) weight is 1.
inline SnfCharts charts_via_snf(const ExtremalPRes &p) {
  const BigInt d = delta(p);
  if (d < 2)
    throw Error(ErrorCode::DeltaTooSmall,
                "antiflip charts need delta >= 2, got " + d.str());
  MoriData mori = mori_sequences(p);
  FanData fan = build_fans(p, mori);
  const BigInt &ck1 = mori.c(mori.k - 1);
  const BigInt &ck = mori.c(mori.k);

  // Rows w2, w4 - w2, w5 - w2 in the basis (w2, w1, w3).
  IntMatrix g_rel{{1, 0, 0}, {0, p.m1(), -ck1}, {0, -p.m2(), -ck}};
  SnfChart g = detail::chart_from_smith(std::move(g_rel), {1, 0, 2},
                                        {fan.w[1], fan.w[3], fan.w[4]});
  // Rows w3, w4 + c(k-1) w3, w5 + c(k) w3 in the basis (w3, w1, w2).
  IntMatrix h_rel{{1, 0, 0}, {0, p.m1(), 1}, {0, -p.m2(), 1}};
  SnfChart h = detail::chart_from_smith(std::move(h_rel), {2, 0, 1},
                                        {fan.w[2], fan.w[3], fan.w[4]});

  AntiflipCharts out;
  out.delta = g.chart.r;
  out.f = h.chart.r;
  {
    const BigInt u = mod_inverse(g.chart.w[2], out.delta);
    out.rho = mod(u * g.chart.w[1], out.delta);
  }
  {
    const BigInt u = mod_inverse(h.chart.w[1], out.f);
    out.lambda = mod(u * h.chart.w[0], out.f);
  }
  out.w1 = g.chart;
  out.w2 = h.chart;
  out.fan = std::move(fan);
  out.mori = std::move(mori);
  return {std::move(g), std::move(h), std::move(out)};
}

using Ray2 = std::array<BigInt, 2>;

/// First `count` rays v1 = (1,0), v2 = (delta,1), v_{i+1} = delta v_i - v_{i-1}
/// of the fan of the base M of the universal antiflip family.
inline std::vector<Ray2> mfan_rays(const BigInt &d, std::size_t count) {
  if (d < 1) throw Error(ErrorCode::InvalidInput, "delta must be at least 1");
  if (count < 2) throw Error(ErrorCode::InvalidInput, "need at least two rays");
  std::vector<Ray2> rays{{1, 0}, {d, 1}};
  while (rays.size() < count) {
    const Ray2 &a = rays[rays.size() - 2];
    const Ray2 &b = rays.back();
    rays.push_back({d * b[0] - a[0], d * b[1] - a[1]});
  }
  return rays;
}

} // namespace toricflip
