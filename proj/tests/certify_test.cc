// Copyright 2026 The groupcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "groupcert/certify.h"

#include <random>

#include <gtest/gtest.h>

#include "groupcert/catalog.h"
#include "groupcert/geometry.h"
#include "test_util.h"

namespace groupcert {
namespace {

using testing::R;
using testing::V;

TEST(SegmentMuTest, GmiFullPeriod) {
  const PeriodicPLF phi = catalog::Gmi(R("2/5"));
  const SlopePartition p = ComputeSlopePartition(phi);
  const SegmentDecomposition d = SegmentMu(phi, p, V({"1"}));
  EXPECT_EQ(d.masses, V({"3/5", "2/5"}));
  EXPECT_EQ(ReconstructIncrement(d, p), R("0"));
  ASSERT_EQ(d.intervals[0].size(), 1u);
  EXPECT_EQ(d.intervals[0][0], (ParameterInterval{R("0"), R("3/5")}));
}

TEST(SegmentMuTest, GmiInsideFirstCell) {
  const PeriodicPLF phi = catalog::Gmi(R("2/5"));
  const SlopePartition p = ComputeSlopePartition(phi);
  const SegmentDecomposition d = SegmentMu(phi, p, V({"3/5"}));
  EXPECT_EQ(d.masses, V({"1", "0"}));
  EXPECT_EQ(ReconstructIncrement(d, p), R("1"));
}

TEST(SegmentMuTest, ZeroTargetConvention) {
  const PeriodicPLF phi = catalog::TriangleLiftingFixture();
  const SlopePartition p = ComputeSlopePartition(phi);
  const SegmentDecomposition d = SegmentMu(phi, p, V({"0", "0"}));
  EXPECT_EQ(d.masses, V({"1", "0", "0"}));
  EXPECT_EQ(ReconstructIncrement(d, p), R("0"));
}

TEST(SegmentMuTest, ReconstructionOnRandomTargets) {
  std::mt19937_64 rng(29);
  for (const PeriodicPLF& phi :
       {catalog::Gmi(R("2/5")), catalog::Spike(),
        catalog::NonExtremeThreeSlope(), catalog::TriangleLiftingFixture(),
        catalog::DiagonalLift(catalog::Gmi(R("2/5")), V({"1/5", "1/5"}))}) {
    const SlopePartition p = ComputeSlopePartition(phi);
    const Rational base = phi.Evaluate(Zeros(phi.k()));
    for (int trial = 0; trial < 20; ++trial) {
      const RatVector r = testing::RandomVector(rng, phi.k(), 2, 9);
      const SegmentDecomposition d = SegmentMu(phi, p, r);
      Rational total;
      for (const auto& m : d.masses) {
        EXPECT_GE(m, R("0"));
        total += m;
      }
      EXPECT_EQ(total, R("1"));
      EXPECT_EQ(ReconstructIncrement(d, p), phi.Evaluate(r) - base);
    }
  }
}

TEST(GenuinelyKDimensionalTest, Examples) {
  EXPECT_TRUE(GenuinelyKDimensional(
      ComputeSlopePartition(catalog::Gmi(R("2/5")))));
  EXPECT_FALSE(GenuinelyKDimensional(ComputeSlopePartition(
      catalog::DiagonalLift(catalog::Gmi(R("2/5")), V({"1/5", "1/5"})))));
  EXPECT_FALSE(
      GenuinelyKDimensional(ComputeSlopePartition(catalog::ConstantZero(1))));
  EXPECT_TRUE(GenuinelyKDimensional(
      ComputeSlopePartition(catalog::TriangleLiftingFixture())));
}

TEST(SlopeHypothesisTest, Examples) {
  EXPECT_TRUE(
      CheckSlopeHypothesis(ComputeSlopePartition(catalog::Gmi(R("2/5"))), 1));
  EXPECT_FALSE(CheckSlopeHypothesis(
      ComputeSlopePartition(catalog::NonExtremeThreeSlope()), 1));
  const SlopePartition tri =
      ComputeSlopePartition(catalog::TriangleLiftingFixture());
  EXPECT_EQ(tri.size(), 3u);
  EXPECT_TRUE(CheckSlopeHypothesis(tri, 2));
}

TEST(FindDirectionsTest, Gmi) {
  const PeriodicPLF phi = catalog::Gmi(R("2/5"));
  const DirectionSet d = FindDirections(phi, ComputeSlopePartition(phi));
  EXPECT_EQ(d.epsilon, R("1/5"));
  EXPECT_EQ(d.directions, (std::vector<RatVector>{V({"-1/5"}), V({"1/5"})}));
  EXPECT_TRUE(ProperSubsetsIndependent(d.directions));
}

TEST(FindDirectionsTest, TriangleRaysAreSharedByOtherClasses) {
  const PeriodicPLF phi = catalog::TriangleLiftingFixture();
  const SlopePartition p = ComputeSlopePartition(phi);
  const DirectionSet d = FindDirections(phi, p);
  ASSERT_EQ(d.directions.size(), 3u);
  EXPECT_TRUE(ConeSpans(d.directions));
  EXPECT_TRUE(ProperSubsetsIndependent(d.directions));
  for (size_t i = 0; i < 3; ++i) {
    ASSERT_EQ(d.witness_cells[i].size(), 2u);
    size_t w = 0;
    for (size_t j = 0; j < 3; ++j) {
      if (j == i) continue;
      const size_t cell = d.witness_cells[i][w++];
      EXPECT_EQ(p.class_of_cell[cell], j);
      EXPECT_GT(Dot(d.directions[i], p.classes[j].gradient), R("0"));
    }
  }
}

TEST(FindDirectionsTest, DiagonalLiftNotFound) {
  const PeriodicPLF phi =
      catalog::DiagonalLift(catalog::Gmi(R("2/5")), V({"1/5", "1/5"}));
  EXPECT_THROW(FindDirections(phi, ComputeSlopePartition(phi)),
               DirectionsNotFound);
}

TEST(ChooseAnchorsTest, Examples) {
  const AnchorSet a1 = ChooseAnchors(V({"2/5"}));
  EXPECT_EQ(a1.anchors, (std::vector<RatVector>{V({"3/5"}), V({"-2/5"})}));
  EXPECT_EQ(a1.lattice_points, (std::vector<RatVector>{V({"1"}), V({"0"})}));

  // e_1 - f and e_2 - f are opposite here, so both default sets fail and
  // the scan takes over.
  const AnchorSet a2 = ChooseAnchors(V({"1/2", "1/2"}));
  EXPECT_TRUE(ConeSpans(a2.anchors));
  EXPECT_EQ(a2.anchors,
            (std::vector<RatVector>{V({"-5/2", "-5/2"}), V({"-5/2", "-1/2"}),
                                    V({"3/2", "1/2"})}));

  const AnchorSet a0 = ChooseAnchors(V({"0"}));
  EXPECT_TRUE(ConeSpans(a0.anchors));
}

TEST(ChooseAnchorsTest, SpanAndIntegralityOnRandomF) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const size_t k = 1 + trial % 3;
    RatVector f;
    for (size_t i = 0; i < k; ++i) {
      f.push_back(testing::RandomRational(rng, 1, 9).FractionalPart());
    }
    const AnchorSet a = ChooseAnchors(f);
    ASSERT_EQ(a.anchors.size(), k + 1);
    EXPECT_TRUE(ConeSpans(a.anchors));
    for (size_t i = 0; i <= k; ++i) {
      EXPECT_EQ(Add(a.anchors[i], f), a.lattice_points[i]);
      for (const auto& x : a.lattice_points[i]) EXPECT_TRUE(x.is_integer());
    }
  }
}

TEST(BuildAndSolveSystemTest, GmiUnique) {
  const PeriodicPLF phi = catalog::Gmi(R("2/5"));
  const SlopePartition p = ComputeSlopePartition(phi);
  const DirectionSet d = FindDirections(phi, p);
  const AnchorSet a = ChooseAnchors(phi.f());
  const SystemReport s =
      BuildAndSolveSystem(p.Gradients(), d, a, ComputeMu(phi, p, a));
  EXPECT_TRUE(s.unique());
  EXPECT_EQ(s.unknowns, 2u);
  EXPECT_EQ(s.direction_equations, 0u);
  EXPECT_EQ(s.reformulated_rank, 4u);
  EXPECT_EQ(s.solution, (std::vector<RatVector>{V({"5/3"}), V({"-5/2"})}));
  EXPECT_TRUE(s.matches_gradients);
}

TEST(BuildAndSolveSystemTest, TriangleUnique) {
  const PeriodicPLF phi = catalog::TriangleLiftingFixture();
  const SlopePartition p = ComputeSlopePartition(phi);
  const DirectionSet d = FindDirections(phi, p);
  const AnchorSet a = ChooseAnchors(phi.f());
  const SystemReport s =
      BuildAndSolveSystem(p.Gradients(), d, a, ComputeMu(phi, p, a));
  EXPECT_TRUE(s.unique());
  EXPECT_EQ(s.unknowns, 6u);
  EXPECT_EQ(s.integral_equations, 3u);
  EXPECT_EQ(s.direction_equations, 3u);
  EXPECT_EQ(s.reformulated_rank, s.reformulated_unknowns);
  EXPECT_EQ(s.solution, p.Gradients());
}

TEST(BuildAndSolveSystemTest, EqualDirectionsAreDegenerate) {
  const PeriodicPLF phi = catalog::TriangleLiftingFixture();
  const SlopePartition p = ComputeSlopePartition(phi);
  DirectionSet d = FindDirections(phi, p);
  // Identical zero directions leave only the three integral equations.
  for (auto& r : d.directions) r = Zeros(2);
  const AnchorSet a = ChooseAnchors(phi.f());
  const SystemReport s =
      BuildAndSolveSystem(p.Gradients(), d, a, ComputeMu(phi, p, a));
  EXPECT_FALSE(s.unique());
  EXPECT_GE(s.nullspace_dimension, 1u);
}

TEST(BuildAndSolveSystemTest, WrongGradientsRaise) {
  const PeriodicPLF phi = catalog::Gmi(R("2/5"));
  const SlopePartition p = ComputeSlopePartition(phi);
  const DirectionSet d = FindDirections(phi, p);
  const AnchorSet a = ChooseAnchors(phi.f());
  EXPECT_THROW(BuildAndSolveSystem({V({"1"}), V({"-1"})}, d, a,
                                   ComputeMu(phi, p, a)),
               std::logic_error);
}

TEST(CertifyFacetTest, Verdicts) {
  const Certificate gmi = CertifyFacet(catalog::Gmi(R("2/5")));
  EXPECT_EQ(gmi.verdict, Verdict::kFacetCertified);
  EXPECT_TRUE(gmi.failed_stage.empty());

  const Certificate lift = CertifyFacet(
      catalog::DiagonalLift(catalog::Gmi(R("2/5")), V({"1/5", "1/5"})));
  EXPECT_EQ(lift.verdict, Verdict::kHypothesisFailed);
  EXPECT_EQ(lift.failed_stage, "genuine-dimensionality");

  const Certificate spike = CertifyFacet(catalog::Spike());
  EXPECT_EQ(spike.verdict, Verdict::kHypothesisFailed);
  EXPECT_EQ(spike.failed_stage, "minimality");
  EXPECT_FALSE(spike.directions.has_value());

  const Certificate three = CertifyFacet(catalog::NonExtremeThreeSlope());
  EXPECT_EQ(three.failed_stage, "slope-count");

  const Certificate tri = CertifyFacet(catalog::TriangleLiftingFixture());
  EXPECT_EQ(tri.verdict, Verdict::kFacetCertified);
  EXPECT_EQ(tri.system->solution, tri.gradients);
}

TEST(CertifyFacetTest, GmiFamily) {
  for (const char* f : {"1/5", "2/5", "1/2", "3/7", "7/11", "1/13", "12/13"}) {
    const Rational fr = R(f);
    const Certificate c = CertifyFacet(catalog::Gmi(fr));
    EXPECT_EQ(c.verdict, Verdict::kFacetCertified) << f;
    EXPECT_EQ(c.system->solution,
              (std::vector<RatVector>{{Rational(1) / (Rational(1) - fr)},
                                      {-Rational(1) / fr}}))
        << f;
  }
}

}  // namespace
}  // namespace groupcert
