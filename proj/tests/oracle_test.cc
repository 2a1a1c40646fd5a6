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

#include "groupcert/oracle.h"

#include <gtest/gtest.h>

#include "groupcert/catalog.h"
#include "test_util.h"

namespace groupcert {
namespace {

using testing::R;
using testing::V;

TEST(OracleExtremalityTest, GmiUnique) {
  const PeriodicPLF gmi = catalog::Gmi(R("2/5"));
  for (int64_t q : {5, 10, 15}) {
    const OracleReport r = OracleExtremality(gmi, q);
    EXPECT_TRUE(r.unique()) << q;
    EXPECT_EQ(r.unknowns, static_cast<size_t>(q));
    EXPECT_EQ(r.rank, static_cast<size_t>(q));
  }
}

TEST(OracleExtremalityTest, OffGridIsMismatch) {
  EXPECT_THROW(OracleExtremality(catalog::Gmi(R("2/5")), 7), GridMismatch);
  // f on the grid but the breakpoint 3/5 is not.
  EXPECT_THROW(OracleExtremality(catalog::Gmi(R("1/2")), 3), GridMismatch);
}

TEST(OracleExtremalityTest, NonExtremeThreeSlopeIsDegenerate) {
  const PeriodicPLF phi = catalog::NonExtremeThreeSlope();
  const OracleReport r = OracleExtremality(phi, 12);
  ASSERT_EQ(r.verdict, OracleReport::Verdict::kDegenerate);
  EXPECT_GE(r.nullspace_dimension, 1u);
  ASSERT_TRUE(r.perturbation);
  const Perturbation& p = *r.perturbation;
  EXPECT_TRUE(p.both_minimal);
  EXPECT_GT(p.epsilon, R("0"));
  EXPECT_NE(p.plus, p.minus);
  EXPECT_TRUE(p.extends_to_complex);

  FiniteGroupModel plus = RestrictToGrid(phi, 12);
  FiniteGroupModel minus = plus;
  plus.values = p.plus;
  minus.values = p.minus;
  EXPECT_FALSE(OracleMinimality(plus));
  EXPECT_FALSE(OracleMinimality(minus));
  // phi is the midpoint of the two.
  for (size_t i = 0; i < p.plus.size(); ++i) {
    EXPECT_EQ((p.plus[i] + p.minus[i]) / 2, RestrictToGrid(phi, 12).values[i]);
  }
}

TEST(OracleExtremalityTest, TriangleUniqueAtNaturalGrids) {
  const PeriodicPLF tri = catalog::TriangleLiftingFixture();
  for (int64_t q : SelectGridDenominators(tri, {1, 2})) {
    EXPECT_TRUE(OracleExtremality(tri, q).unique()) << q;
  }
}

TEST(OracleExtremalityTest, NonMinimalInputIsInfeasible) {
  EXPECT_EQ(OracleExtremality(catalog::WrongPeak(R("2/5")), 5).verdict,
            OracleReport::Verdict::kInfeasible);
}

// psi(x) = phi(-x) is minimal for 1 - f, and x -> -x maps the tight system of
// phi onto that of psi, so the verdicts agree.
TEST(OracleExtremalityTest, InvariantUnderReflection) {
  for (const PeriodicPLF& phi :
       {catalog::Gmi(R("2/5")), catalog::NonExtremeThreeSlope()}) {
    const int64_t q = 2 * phi.NaturalDenominator();
    std::vector<catalog::Breakpoint> table;
    for (int64_t i = 0; i <= q; ++i) {
      const Rational x(i, q);
      table.push_back({x, phi.Evaluate({-x})});
    }
    const PeriodicPLF reflected =
        catalog::FromBreakpoints(Rational(1) - phi.f()[0], table);
    EXPECT_EQ(OracleExtremality(phi, q).verdict,
              OracleExtremality(reflected, q).verdict);
  }
}

TEST(OracleMinimalityTest, Examples) {
  EXPECT_FALSE(OracleMinimality(RestrictToGrid(catalog::Gmi(R("2/5")), 5)));

  const auto spike = OracleMinimality(RestrictToGrid(catalog::Spike(), 20));
  ASSERT_TRUE(spike);
  EXPECT_EQ(spike->kind, ViolationWitness::Kind::kSubadditivity);
  EXPECT_EQ(spike->points[0], V({"5/20"}));
  EXPECT_EQ(spike->points[1], V({"5/20"}));

  FiniteGroupModel zero;
  zero.q = 4;
  zero.k = 1;
  zero.f_index = std::vector<int64_t>{1};
  zero.values.assign(4, R("0"));
  const auto w = OracleMinimality(zero);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, ViolationWitness::Kind::kSymmetry);
}

TEST(OracleMinimalityTest, OriginAndNegativity) {
  FiniteGroupModel m = RestrictToGrid(catalog::Gmi(R("1/2")), 2);
  m.values[0] = R("1/3");
  EXPECT_EQ(OracleMinimality(m)->kind, ViolationWitness::Kind::kOrigin);
  m.values[0] = R("0");
  m.values[1] = R("-1");
  EXPECT_EQ(OracleMinimality(m)->kind, ViolationWitness::Kind::kNegativity);
}

TEST(CrossCheckTest, Examples) {
  const PeriodicPLF gmi = catalog::Gmi(R("2/5"));
  for (int64_t q : {5, 10, 15}) {
    const ConsistencyReport r = CrossCheck(gmi, q);
    EXPECT_TRUE(r.consistent());
    EXPECT_TRUE(r.certified);
    EXPECT_TRUE(r.grid_unique);
  }
  const ConsistencyReport spike = CrossCheck(catalog::Spike(), 20);
  EXPECT_TRUE(spike.consistent());
  EXPECT_FALSE(spike.exact_minimal);
  EXPECT_FALSE(spike.grid_minimal);

  const ConsistencyReport lift = CrossCheck(
      catalog::DiagonalLift(gmi, V({"1/5", "1/5"})), 10);
  EXPECT_TRUE(lift.consistent());
  EXPECT_FALSE(lift.certified);
}

TEST(SelectGridDenominatorsTest, Multiples) {
  EXPECT_EQ(SelectGridDenominators(catalog::Gmi(R("2/5")), {1, 2, 3}),
            (std::vector<int64_t>{5, 10, 15}));
}

}  // namespace
}  // namespace groupcert
