// Copyright 2026 The oec Authors
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

#include <gtest/gtest.h>

#include "oec/euler_calc.hpp"

namespace {

using oec::Angle;
using oec::Stratum;

TEST(EulerCalc, CompactlySupportedCharacteristics) {
  EXPECT_EQ(Stratum::point(0).chi_c(), 1);
  EXPECT_EQ(Stratum::open_interval(0, 1).chi_c(), -1);
  EXPECT_EQ(Stratum::half_open_interval(0, 1, true).chi_c(), 0);
  EXPECT_EQ(Stratum::closed_interval(0, Angle(1, 2)).chi_c(), 1);
  EXPECT_EQ(Stratum::circle().chi_c(), 0);
  EXPECT_EQ(Stratum::finite_set(7).chi_c(), 7);
  EXPECT_EQ(Stratum::cofinite_complement(0, 3).chi_c(), -3);  // circle minus 3 points
  EXPECT_THROW(Stratum::open_interval(1, 1), oec::InvalidArgument);
  EXPECT_THROW(Stratum::finite_set(-1), oec::InvalidArgument);
}

TEST(EulerCalc, WrapTurn) {
  EXPECT_EQ(oec::wrap_turn(Angle(5, 4)), Angle(1, 4));
  EXPECT_EQ(oec::wrap_turn(Angle(-1, 4)), Angle(3, 4));
  EXPECT_EQ(oec::wrap_turn(Angle(-2)), Angle(0));
  EXPECT_EQ(oec::to_string(Angle(3, 6)), "1/2");
}

TEST(EulerCalc, RefiningACirclePreservesChi) {
  for (int m = 1; m <= 7; ++m) {
    std::vector<Angle> points;
    for (int j = 0; j < m; ++j) points.push_back(Angle(j, m) + Angle(1, 3));
    const auto pieces = oec::refine_at_points(Stratum::circle(), points);
    EXPECT_EQ(pieces.size(), 2u * m);
    EXPECT_EQ(oec::euler_char(pieces), 0);
    for (const auto& p : pieces) EXPECT_TRUE(p.kind == oec::StratumKind::point || p.chi_c() == -1);
  }
}

TEST(EulerCalc, RefiningIntervalsKeepsEndpointClosure) {
  const Stratum closed = Stratum::closed_interval(0, Angle(1, 2));
  const auto inner = oec::refine_at_points(closed, {Angle(1, 4)});
  EXPECT_EQ(inner.size(), 3u);
  EXPECT_EQ(oec::euler_char(inner), 1);
  const auto ends = oec::refine_at_points(closed, {Angle(0), Angle(1, 2), Angle(1, 6)});
  EXPECT_EQ(oec::euler_char(ends), 1);
  EXPECT_EQ(ends.size(), 5u);
  const auto half = oec::refine_at_points(Stratum::half_open_interval(0, 1, true), {Angle(1, 2)});
  EXPECT_EQ(oec::euler_char(half), 0);
  EXPECT_THROW(oec::refine_at_points(closed, {Angle(3, 4)}), oec::InvalidArgument);
  EXPECT_THROW(oec::refine_at_points(Stratum::finite_set(2), {Angle(0)}), oec::InvalidArgument);
}

TEST(EulerCalc, ArcsAcrossTheBasePoint) {
  const Stratum arc = Stratum::open_interval(Angle(3, 4), Angle(5, 4), 0, true);
  EXPECT_TRUE(arc.contains(Angle(0)));
  EXPECT_TRUE(arc.contains(Angle(1, 8)));
  EXPECT_FALSE(arc.contains(Angle(1, 2)));
  const auto pieces = oec::refine_at_points(arc, {Angle(0)});
  EXPECT_EQ(pieces.size(), 3u);
  EXPECT_EQ(oec::euler_char(pieces), -1);
}

TEST(EulerCalc, IntegrationOfConstructibleFunctions) {
  // constant 5 on the circle integrates to 0
  oec::ConstructibleFunction flat(0, {{Stratum::circle(), 5}});
  EXPECT_EQ(oec::integrate(flat), 0);
  // m on the points j/4, 1 elsewhere: 4 * m - 4 * 1
  std::vector<Angle> pts;
  for (int j = 0; j < 4; ++j) pts.push_back(Angle(j, 4));
  std::vector<oec::Piece> pieces;
  for (const auto& s : oec::refine_at_points(Stratum::circle(), pts))
    pieces.push_back({s, s.kind == oec::StratumKind::point ? 3 : 1});
  EXPECT_EQ(oec::integrate(oec::ConstructibleFunction(0, pieces)), 8);
}

TEST(EulerCalc, MalformedFunctionsAreRejected) {
  // pieces do not cover
  EXPECT_THROW(oec::ConstructibleFunction(0, {{Stratum::open_interval(0, Angle(1, 2), 0, true), 1}}),
               oec::InvalidArgument);
  // overlapping pieces with the right total
  EXPECT_THROW(oec::ConstructibleFunction(
                   1, {{Stratum::closed_interval(0, Angle(1, 2)), 1},
                       {Stratum::open_interval(Angle(1, 4), Angle(3, 4)), 1},
                       {Stratum::point(Angle(1, 4)), 1}}),
               oec::InvalidArgument);
  // the same total on different components is fine
  EXPECT_NO_THROW(oec::ConstructibleFunction(2, {{Stratum::point(0, 0), 1}, {Stratum::point(0, 1), 1}}));
}

}  // namespace
