// SPDX-License-Identifier: Apache-2.0
#include "instances.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace toricflip;
using oracle::i64;

TEST(ChartEquations, DegreeFiveCone) {
  const ChartEquations eq = chart_equations(antiflip_charts(instances::rnc_cone(5)));
  EXPECT_EQ(eq.s1, "X1·Y1·Z1 = Y1^3 + Z1^3 in A^3/(1/3)(1,1,1)");
  EXPECT_EQ(eq.s2, "Y2·Z2 = X2·Z2^3 + X2·Y2^3 in A^3/(1/2)(1,1,1)");
  EXPECT_EQ(eq.gluing, "X1^3 = X2^-2, Y1^3 = X2·Y2^3, Z1^3 = X2·Z2^3");
}

TEST(ChartEquations, Delta2Instance) {
  const ChartEquations eq = chart_equations(antiflip_charts(make_presolution(1, 1, 3, 1, 2)));
  EXPECT_EQ(eq.s1, "X1·Y1·Z1 = Y1^2 + Z1^2 in A^3/(1/2)(0,1,1)");
  EXPECT_EQ(eq.s2, "Y2·Z2 = X2·Z2^2 + X2^3·Y2^2 in A^3/(1/4)(2,1,3)");
  EXPECT_EQ(eq.gluing, "X1^2 = X2^-4, Y1^2 = X2^3·Y2^2, Z1^2 = X2·Z2^2");
}

TEST(T1, ClosedForm) {
  EXPECT_EQ(t1_normalization(3), (SurfaceCQS{3, 1, 1}));
  EXPECT_EQ(t1_normalization(4), (SurfaceCQS{8, 1, 5}));
  EXPECT_EQ(t1_normalization(5), (SurfaceCQS{15, 1, 11}));
  EXPECT_THROW(t1_normalization(2), Error);
  // the lattice oracle with a trivial action recovers 1/r(1,a)
  for (i64 d = 3; d <= 9; ++d) {
    const i64 r = d * (d - 2), a = d * d - 3 * d + 1;
    const auto t = oracle::quadrant_type([&](i64 i, i64 k) { return oracle::pmod(i + a * k, r) == 0; }, r);
    const SurfaceCQS s = t1_normalization(d);
    EXPECT_TRUE(oracle::same_surface(t, static_cast<i64>(s.m), static_cast<i64>(s.q2))) << d;
  }
}

TEST(S1, Examples) {
  EXPECT_EQ(s1_normalization(3, 1), (SurfaceCQS{9, 1, 1}));
  EXPECT_EQ(s1_normalization(4, 1), (SurfaceCQS{8, 1, 1}));
  EXPECT_TRUE(s1_normalization(3, 2).is_smooth());
  EXPECT_THROW(s1_normalization(2, 1), Error);
  EXPECT_THROW(s1_normalization(5, 5), Error);
}

TEST(S1, AgreesWithInvariantMonomials) {
  for (i64 d = 3; d <= 9; ++d)
    for (i64 rho = 0; rho < d; ++rho) {
      const SurfaceCQS s = s1_normalization(d, rho);
      EXPECT_TRUE(s.is_normalized());
      const auto t = oracle::s1_by_lattice(d, rho);
      EXPECT_TRUE(oracle::same_surface(t, static_cast<i64>(s.m), static_cast<i64>(s.q2)))
          << "delta=" << d << " rho=" << rho << " got " << s.str() << " oracle 1/" << t.first
          << "(1," << t.second << ")";
    }
}

TEST(S1, OracleRecognizesKnownQuotients) {
  for (i64 n = 2; n <= 25; ++n)
    for (i64 q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const auto t = oracle::quadrant_type([&](i64 i, i64 k) { return oracle::pmod(i + q * k, n) == 0; }, n);
      EXPECT_TRUE(oracle::same_surface(t, n, q)) << n << " " << q;
    }
}

TEST(FP, FromResolutions) {
  EXPECT_EQ(fp_of(make_presolution(1, 1, 3, 1, 2)), (FPPair{2, 1}));
  EXPECT_EQ(fp_of(make_presolution(3, 1, 7, 4, 1)), (FPPair{5, 2}));
  EXPECT_EQ(fp_of(make_presolution(8, 3, 2, 1, 1)), (FPPair{5, 2}));
  try {
    fp_of(instances::rnc_cone(4));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::ExcludedCase);
  }
  try {
    fp_of(instances::rnc_cone(5));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDelta2);
  }
}

TEST(FP, Constructions) {
  auto [a, b] = presolutions_of({2, 1});
  EXPECT_EQ(a, make_presolution(1, 1, 3, 1, 2));
  EXPECT_EQ(b, make_presolution(3, 1, 1, 1, 2));
  auto [c, d] = presolutions_of({5, 2});
  EXPECT_EQ(c, make_presolution(3, 1, 7, 4, 1));
  EXPECT_EQ(d, make_presolution(8, 3, 2, 1, 1));
  EXPECT_EQ(format_marked(xplus_chain(c)), "[3,2,6,2]-(-1)-[5,2]");
  EXPECT_EQ(format_marked(xplus_chain(d)), "[4]-(-1)-[3,5,3,2]");
  auto [e, f] = presolutions_of({7, 3});
  EXPECT_EQ(format_marked(xplus_chain(e)), "[3,2,2,7,2]-(-1)-[3,5,2]");
  EXPECT_EQ(format_marked(xplus_chain(f)), "[4]-(-1)-[3,2,5,4,2]");
  // p = 1 closed forms
  for (long n = 3; n <= 30; ++n) {
    auto [g, h] = presolutions_of({n, 1});
    EXPECT_EQ(g, make_presolution(1, 1, 2 * n - 1, 2 * n - 3, 2));
    EXPECT_EQ(h, make_presolution(n + 1, 1, n - 1, n - 2 > 0 ? n - 2 : 1, 1));
  }
  for (const FPPair bad : {FPPair{4, 2}, FPPair{5, 3}, FPPair{1, 1}, FPPair{6, 0}}) {
    try {
      presolutions_of(bad);
      ADD_FAILURE() << bad.str();
    } catch (const Error &err) {
      EXPECT_EQ(err.code(), ErrorCode::InvalidFP);
    }
  }
}

TEST(FP, RoundTripAndGcdConditions) {
  for (long f = 2; f <= 40; ++f)
    for (long p = 1; 2 * p <= f; ++p) {
      if (gcd(p, f) != 1) continue;
      const auto [a, b] = presolutions_of({f, p});
      EXPECT_NE(a, b);
      for (const auto &x : {a, b}) {
        EXPECT_EQ(delta(x), 2);
        EXPECT_EQ(fp_of(x), (FPPair{f, p})) << x.str();
        EXPECT_EQ(gcd(x.m1(), x.a1()), 1);
        EXPECT_EQ(gcd(x.m2(), x.a2()), 1);
      }
    }
}

TEST(FP, MirrorReversesChains) {
  for (long f = 3; f <= 30; ++f)
    for (long p = 1; 2 * p < f; ++p) {
      if (gcd(p, f) != 1) continue;
      const auto [a, b] = construct_presolutions(f, p);
      const auto [c, d] = construct_presolutions(f, f - p);
      EXPECT_EQ(xplus_chain(c), xplus_chain(b).reversed()) << f << " " << p;
      EXPECT_EQ(xplus_chain(d), xplus_chain(a).reversed()) << f << " " << p;
    }
}

TEST(XNu, ChainExamples) {
  EXPECT_EQ(format_marked(xnu_chain({3, 1})), "[3]-(-5)-[2,2]");
  EXPECT_EQ(format_marked(xnu_chain({5, 2})), "[3,2]-(-5)-[3,2]");
  EXPECT_EQ(format_marked(xnu_chain({7, 3})), "[3,2,2]-(-5)-[4,2]");
  EXPECT_THROW(xnu_chain({7, 4}), Error);
}

TEST(XNu, CorrectionTermIdentity) {
  // Pulling C^2 = -5 back along the two branch points adds p/f and (f-p)/f.
  for (long f = 2; f <= 40; ++f)
    for (long p = 1; 2 * p <= f; ++p) {
      if (gcd(p, f) != 1) continue;
      const MarkedChain x = xnu_chain({f, p});
      EXPECT_EQ(Rational(x.mark) + Rational(p, f) + Rational(f - p, f), Rational(-4));
      // each side evaluates to its branch germ
      EXPECT_EQ(hj_eval(x.left), (Fraction{f, p}));
      ChainEntries r(x.right.rbegin(), x.right.rend());
      EXPECT_EQ(hj_eval(r), (Fraction{f, f - p}));
    }
}

TEST(XNu, SidesAreOncBranchResolutions) {
  for (const auto &x : instances::delta2(20)) {
    const AntiflipCharts a = antiflip_charts(x);
    const ONCData onc = onc_from_threefold(a.w2);
    const FPPair fp = fp_of(x, a);
    const MarkedChain chain = xnu_chain(fp);
    ChainEntries left = resolution_entries(onc.first);
    std::reverse(left.begin(), left.end());
    const ChainEntries right = resolution_entries(onc.second);
    const MarkedChain from_onc(left, -5, right);
    // canonicalizing p may swap the branches
    EXPECT_TRUE(from_onc == chain || from_onc.reversed() == chain) << x.str();
    EXPECT_EQ(onc.m, fp.f);
  }
}

TEST(XPlus, Examples) {
  EXPECT_EQ(format_marked(xplus_chain(make_presolution(4, 1, 2, 1, 1))), "[4]-(-1)-[6,2,2]");
  EXPECT_EQ(format_marked(xplus_chain(make_presolution(1, 1, 5, 3, 2))), "[3,5,2]-(-2)");
  EXPECT_EQ(format_marked(xplus_chain(instances::rnc_cone(4))), "(-4)");
}

TEST(Table, GoldenFile) {
  std::ifstream in(TORICFLIP_DATA_DIR "/table1.txt");
  ASSERT_TRUE(in.good());
  std::vector<std::string> golden;
  for (std::string line; std::getline(in, line);) golden.push_back(line);
  const auto rows = table_rows(7);
  ASSERT_EQ(rows.size(), golden.size());
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(format_row(rows[i]), golden[i]);
  EXPECT_EQ(table_rows(2).size(), 1u);
  EXPECT_THROW(table_rows(1), Error);
}

TEST(Table, RowsAreSortedAndMarked) {
  const auto rows = table_rows(20);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].xnu.mark, -5);
    for (const auto *x : {&rows[i].xplus_1, &rows[i].xplus_2})
      EXPECT_TRUE(x->mark == -1 || x->mark == -2);
    if (i) {
      const auto &a = rows[i - 1].fp, &b = rows[i].fp;
      EXPECT_TRUE(a.f < b.f || (a.f == b.f && a.p < b.p));
    }
  }
}

TEST(Fiber, DegreeFiveCone) {
  const FiberDescription f = fiber_description(instances::rnc_cone(5));
  EXPECT_EQ(f.delta, 3);
  EXPECT_EQ(f.transversal_slice, "A_2");
  EXPECT_EQ(f.local_eq_w1, "(XYZ=Y^3+Z^3) ⊂ 1/3(1,1,1)");
  ASSERT_TRUE(f.s1nu);
  EXPECT_EQ(*f.s1nu, (SurfaceCQS{9, 1, 1}));
  EXPECT_EQ(f.onc.first, (SurfaceCQS{2, 1, 1}));
  EXPECT_EQ(f.chain_str(), "[2]-(-1)-[9]-(-1)-[2]");
  EXPECT_EQ(f.pinch_points, 0);
}

TEST(Fiber, Delta2AndExcludedCone) {
  const FiberDescription f = fiber_description(make_presolution(1, 1, 3, 1, 2));
  EXPECT_EQ(f.pinch_points, 2);
  EXPECT_EQ(f.transversal_slice, "A_1");
  ASSERT_TRUE(f.fp);
  EXPECT_EQ(*f.fp, (FPPair{2, 1}));
  EXPECT_EQ(f.chain_str(), "[2]-(-5)-[2]");

  const FiberDescription g = fiber_description(instances::rnc_cone(4));
  EXPECT_TRUE(g.normalization_smooth);
  EXPECT_EQ(g.pinch_points, 2);
  EXPECT_EQ(g.transversal_slice, "A_1");
  EXPECT_FALSE(g.fp);

  EXPECT_THROW(fiber_description(instances::rnc_cone(3)), Error);
}

TEST(Fiber, HigherDeltaStructure) {
  for (long d = 3; d <= 5; ++d)
    for (const auto &p : instances::with_delta(d, 15)) {
      const FiberDescription f = fiber_description(p);
      EXPECT_EQ(f.transversal_slice, "A_" + std::to_string(d - 1));
      ASSERT_TRUE(f.chain3 && f.s1nu);
      EXPECT_EQ((*f.chain3)[1].empty(), f.s1nu->is_smooth());
      // the two ONC branches are conjugate germs
      EXPECT_EQ(f.onc.first.m, f.onc.second.m);
      if (!f.onc.first.is_smooth())
        EXPECT_EQ(mod(f.onc.first.q2 + f.onc.second.q2, f.onc.first.m), 0) << p.str();
    }
}
