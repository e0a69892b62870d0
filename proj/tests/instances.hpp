// SPDX-License-Identifier: Apache-2.0
#pragma once

// Families of extremal P-resolutions shared by the tests.

#include "toricflip/fiber.hpp"

#include <set>
#include <vector>

namespace instances {

using namespace toricflip;

/// Both delta = 2 resolutions for every canonical pair with f <= f_max.
inline std::vector<ExtremalPRes> delta2(long f_max) {
  std::vector<ExtremalPRes> out;
  for (long f = 2; f <= f_max; ++f)
    for (long p = 1; 2 * p <= f; ++p) {
      if (gcd(p, f) != 1) continue;
      const auto [a, b] = presolutions_of({f, p});
      out.push_back(a);
      out.push_back(b);
    }
  return out;
}

/// The cone over the rational normal curve of degree n: one (-n) curve.
inline ExtremalPRes rnc_cone(long n) { return make_presolution(1, 1, 1, 1, n); }

/// All Wahl data (plus the smooth marker) with m <= m_max.
inline std::vector<WahlData> wahl_points(long m_max) {
  std::vector<WahlData> out{{1, 1}};
  for (long m = 2; m <= m_max; ++m)
    for (long a = 1; a < m; ++a)
      if (gcd(m, a) == 1) out.push_back({m, a});
  return out;
}

/// Data (m1',a1',m2',a2',c) with the given delta, C+ negative and a
/// nondegenerate ambient chain, up to `limit` instances.
inline std::vector<ExtremalPRes> with_delta(long d, std::size_t limit, long m_max = 9,
                                            long c_max = 8) {
  std::vector<ExtremalPRes> out;
  const auto pts = wahl_points(m_max);
  for (long c = 1; c <= c_max; ++c)
    for (const auto &w1 : pts)
      for (const auto &w2 : pts) {
        ExtremalPRes p{w1, w2, c};
        if (delta(p) != d || cplus_self_intersection(p) >= 0) continue;
        try {
          if (ambient(p).big_delta <= 0) continue;
        } catch (const Error &) {
          continue;
        }
        out.push_back(p);
        if (out.size() >= limit) return out;
      }
  return out;
}

} // namespace instances
