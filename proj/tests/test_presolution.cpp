// SPDX-License-Identifier: Apache-2.0
#include "instances.hpp"

#include <gtest/gtest.h>

using namespace toricflip;

TEST(Presolution, DeltaAndValidation) {
  EXPECT_EQ(delta(make_presolution(1, 1, 3, 1, 2)), 2);
  EXPECT_EQ(delta(make_presolution(3, 1, 7, 4, 1)), 2);
  EXPECT_EQ(delta(instances::rnc_cone(5)), 3);
  EXPECT_EQ(chart_order_f(make_presolution(3, 1, 7, 4, 1)), 10);
  EXPECT_EQ(make_presolution(1, 1, 3, 1, 2).str(), "(1,1,3,1,c=2)");
  EXPECT_THROW(make_presolution(1, 1, 1, 1, 0), Error);
  EXPECT_THROW(make_presolution(1, 1, 1, 1, 2), Error); // delta 0
  EXPECT_THROW(make_presolution(4, 2, 1, 1, 3), Error); // not Wahl data
  EXPECT_TRUE(is_degree4_cone(instances::rnc_cone(4)));
}

TEST(Presolution, AmbientChain) {
  // (4,1,2,1,c=1): [4]-1-[6,2,2] contracts to a cyclic quotient
  const AmbientSing a = ambient(make_presolution(4, 1, 2, 1, 1));
  EXPECT_EQ(format_chain(a.chain), "[4,1,6,2,2]");
  EXPECT_EQ(a.big_delta, 36);
  EXPECT_EQ(a.omega, 13);
  // the degree-n cone is 1/n(1,1)
  const AmbientSing cone = ambient(instances::rnc_cone(7));
  EXPECT_EQ(cone.big_delta, 7);
  EXPECT_EQ(cone.omega, 1);
}

TEST(Presolution, AmbientOrderIdentity) {
  // Delta = m1'^2 + m2'^2 + delta m1' m2' for the ambient 1/Delta(1,Omega).
  std::vector<ExtremalPRes> all = instances::delta2(25);
  for (long n = 4; n <= 12; ++n) all.push_back(instances::rnc_cone(n));
  for (const auto &p : all) {
    const AmbientSing a = ambient(p);
    EXPECT_EQ(a.big_delta, p.m1() * p.m1() + p.m2() * p.m2() + delta(p) * p.m1() * p.m2())
        << p.str();
    EXPECT_EQ(gcd(a.big_delta, a.omega), 1);
  }
}

TEST(Presolution, Delta2CaseAnalysis) {
  EXPECT_EQ(case_analysis_delta2(instances::rnc_cone(4)).kind, Delta2Kind::Smooth);
  const Delta2Case one = case_analysis_delta2(make_presolution(1, 1, 5, 3, 2));
  EXPECT_EQ(one.kind, Delta2Kind::OneSing);
  EXPECT_EQ(one.k, 2);
  EXPECT_EQ(one.singular_side, 2);
  EXPECT_EQ(case_analysis_delta2(make_presolution(3, 1, 1, 1, 2)).singular_side, 1);
  EXPECT_EQ(case_analysis_delta2(make_presolution(3, 1, 7, 4, 1)).kind, Delta2Kind::TwoSing);
  try {
    case_analysis_delta2(instances::rnc_cone(5));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDelta2);
  }
}

TEST(Presolution, Delta2FamilyShapesAndEvenF) {
  for (const auto &p : instances::delta2(30)) {
    EXPECT_EQ(chart_order_f(p) % 2, 0) << p.str();
    EXPECT_NO_THROW(case_analysis_delta2(p)) << p.str();
  }
}

TEST(Presolution, SelfIntersectionAndDiscrepancy) {
  for (const auto &p : instances::delta2(30)) {
    const Rational s = Rational(1, p.m1()) + Rational(1, p.m2());
    EXPECT_EQ(cplus_self_intersection(p), -s * s) << p.str();
    const BigInt f = chart_order_f(p);
    EXPECT_EQ(discrepancy_data(p).a2_cplus2, Rational(-4, f * f)) << p.str();
  }
  EXPECT_EQ(cplus_self_intersection(make_presolution(1, 1, 3, 1, 2)), Rational(-16, 9));
  try {
    discrepancy_data(instances::rnc_cone(4));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::ExcludedCase);
  }
  EXPECT_THROW(discrepancy_data(instances::rnc_cone(6)), Error);
}

TEST(Presolution, CanonicalRegion) {
  // On the diagonal the inequality reads (2 - delta) alpha^2 <= 0.
  for (long d = 1; d <= 8; ++d)
    for (long a = 1; a <= 5; ++a)
      EXPECT_EQ(in_canonical_region({a, a}, d), d >= 2) << d << " " << a;
  // At delta = 2 only the diagonal is in the region.
  EXPECT_FALSE(in_canonical_region({1, 2}, 2));
  EXPECT_TRUE(in_canonical_region({1, 2}, 3));
  EXPECT_THROW(in_canonical_region({0, 1}, 3), Error);
}
