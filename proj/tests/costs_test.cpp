// Copyright 2026 The Authors.
//
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

#include <cmath>

#include "recourse/costs.hpp"

namespace recourse {
namespace {

TEST(Costs, RecourseExamples) {
  EXPECT_NEAR(recourse_cost(CostModel({2.0}, {1.0}), Vector{0.3}, Vector{0.6}), 0.6, 1e-15);
  EXPECT_NEAR(recourse_cost(CostModel({2.0}, {1.0}, 0.5), Vector{0.3}, Vector{0.6}), 0.3, 1e-15);
  EXPECT_DOUBLE_EQ(recourse_cost(CostModel({1.0, 1.0}, {1.0, 1.0}), Vector{0, 0}, Vector{3, 4}), 5.0);
  EXPECT_EQ(recourse_cost(CostModel({1.0}, {1.0}), Vector{0.7}, Vector{0.7}), 0.0);
}

TEST(Costs, ManipulationExamples) {
  EXPECT_NEAR(manipulation_cost(CostModel({1.0}, {1.0}), Vector{0.3}, Vector{0.5}), 0.2, 1e-15);
  EXPECT_EQ(manipulation_cost(CostModel({1.0}, {1.0}), Vector{0.3}, Vector{0.3}), 0.0);
  EXPECT_DOUBLE_EQ(manipulation_cost(CostModel({1.0, 1.0}, {3.0, 4.0}, 0.9), Vector{1, 1}, Vector{2, 2}), 5.0);
}

TEST(Costs, SymmetryLinearityAndArgmin) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const CostModel cm = random_cost_model(3, rng);
    const Vector x{normal01(rng), normal01(rng), normal01(rng)};
    const Vector z{normal01(rng), normal01(rng), normal01(rng)};
    EXPECT_EQ(cm.recourse_cost(x, z), cm.recourse_cost(z, x));
    EXPECT_EQ(cm.manipulation_cost(x, z), cm.manipulation_cost(z, x));
    const double alpha = uniform01(rng);
    EXPECT_EQ(cm.with_subsidy(alpha).recourse_cost(x, z), (1.0 - alpha) * cm.recourse_cost(x, z));
    // Oracle: explicit sum of squares.
    double ss = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double d = cm.recourse_weights()[k] * (x[k] - z[k]);
      ss += d * d;
    }
    EXPECT_NEAR(cm.recourse_cost(x, z), std::sqrt(ss), 1e-12);
  }
  // Scaling by (1 - alpha) keeps the cheapest point of a finite set.
  const CostModel cm({1.0, 2.0}, {1.0, 1.0});
  const std::vector<Vector> Z{{1, 1}, {0.5, 2}, {2, 0.1}, {-1, 0.4}};
  const Vector x{0.2, 0.3};
  auto argmin = [&](const CostModel& c) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < Z.size(); ++i)
      if (c.recourse_cost(x, Z[i]) < c.recourse_cost(x, Z[best])) best = i;
    return best;
  };
  for (double alpha : {0.0, 0.3, 0.9, 0.999}) EXPECT_EQ(argmin(cm.with_subsidy(alpha)), argmin(cm));
}

TEST(Costs, Validation) {
  EXPECT_THROW(CostModel({1.0}, {1.0, 2.0}), Error);
  EXPECT_THROW(CostModel({-1.0}, {1.0}), Error);
  EXPECT_THROW(CostModel({NAN}, {1.0}), Error);
  EXPECT_THROW(CostModel({1.0}, {1.0}, 1.5), Error);
  EXPECT_THROW(CostModel({1.0}, {1.0}, -0.1), Error);
  EXPECT_THROW(CostModel({1.0}, {1.0}).recourse_cost(Vector{1, 2}, Vector{1, 2}), Error);
}

TEST(Costs, RandomWeightsStayInRange) {
  Rng rng(1);
  const CostModel cm = random_cost_model(50, rng);
  for (double w : cm.recourse_weights()) {
    EXPECT_GE(w, 0.5);
    EXPECT_LT(w, 2.0);
  }
  Rng again(1);
  EXPECT_EQ(random_cost_model(50, again).manipulation_weights(), cm.manipulation_weights());
}

}  // namespace
}  // namespace recourse
