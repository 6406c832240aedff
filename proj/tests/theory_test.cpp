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

#include "recourse/theory.hpp"

namespace recourse {
namespace {

const LinearClassifier kHalf({1.0}, -0.5);

AgentOutcome acting(double x, ActionKind kind, double target) {
  AgentOutcome a;
  a.features = {x};
  a.action.kind = kind;
  a.action.target = Vector{target};
  return a;
}

TEST(Theory, SignChecks) {
  GameOutcome o;
  AgentOutcome idle;
  idle.features = {0.1};
  o.agents = {idle};
  EXPECT_TRUE(check_thm_signs(o, kHalf).empty());

  o.agents = {acting(0.1, ActionKind::kRecourse, 0.5)};  // q = 0.5 exactly
  EXPECT_TRUE(check_thm_signs(o, kHalf).empty());

  // q(x) = 0.49 gives delta -0.02.
  const double x49 = 0.5 + std::log(0.49 / 0.51);
  o.agents = {acting(x49, ActionKind::kManipulate, 0.6)};
  EXPECT_TRUE(check_thm_signs(o, kHalf).empty());
  EXPECT_NEAR(2 * kHalf.qualification(Vector{x49}) - 1, -0.02, 1e-12);

  // Negative controls: uncalibrated deltas are reported.
  o.agents = {acting(0.1, ActionKind::kRecourse, 0.3), acting(0.7, ActionKind::kManipulate, 0.9)};
  const auto v = check_thm_signs(o, kHalf);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].kind, ActionKind::kRecourse);
  EXPECT_LT(v[0].delta, 0.0);
  EXPECT_GT(v[1].delta, 0.0);
}

SweepConfig step_config() {
  return SweepConfig{{{0.30}, {0.45}}, {0, 1}, {{0.5}}, kHalf, CostModel({2.0}, {1.0}),
                     uniform_grid(11), SweepMetric::kRecourseRate};
}

TEST(Theory, RecourseRateStepsAtFlipPoint) {
  const SweepResult r = sweep_subsidy(step_config());
  ASSERT_EQ(r.values.size(), 11u);
  for (std::size_t i = 0; i < 11; ++i) EXPECT_EQ(*r.values[i], i < 5 ? 0.0 : 1.0) << i;
  EXPECT_TRUE(r.violations.empty());
}

TEST(Theory, SocialCostFollowsIdentity) {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const SweepScenario s = random_sweep_scenario(rng, 12, 3);
    SweepConfig cfg{s.negatives, s.groups, s.Z, s.clf, s.costs, uniform_grid(11), SweepMetric::kSocialCost};
    const SweepResult r = sweep_subsidy(cfg);
    EXPECT_TRUE(r.violations.empty());
    for (std::size_t i = 0; i < r.grid.size(); ++i)
      EXPECT_NEAR(*r.values[i], (1 - r.grid[i]) * *r.values[0], 1e-9 * *r.values[0] + 1e-15);
    EXPECT_EQ(*r.values.back(), 0.0);
    cfg.metric = SweepMetric::kDiffCost;
    EXPECT_TRUE(sweep_subsidy(cfg).violations.empty());
  }
}

TEST(Theory, EmptyZGivesAbsentCosts) {
  SweepConfig cfg = step_config();
  cfg.Z.clear();
  cfg.metric = SweepMetric::kSocialCost;
  const SweepResult r = sweep_subsidy(cfg);
  for (const auto& v : r.values) EXPECT_FALSE(v);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Theory, RateDisparityTail) {
  // Group 0 at 0.45 flips at 1 - w_M / w_R = 0.5. Group 1 at -0.7 has
  // manipulation cost 1.2, capped at 1, so it flips once 2.4 (1 - alpha) < 1,
  // i.e. from alpha = 0.59 on the grid. The disparity is 1 in between.
  SweepConfig cfg{{{0.45}, {-0.7}}, {0, 1}, {{0.5}}, kHalf, CostModel({2.0}, {1.0}),
                  uniform_grid(101), SweepMetric::kDiffRec};
  const SweepResult r = sweep_subsidy(cfg);
  EXPECT_TRUE(r.violations.empty());
  ASSERT_TRUE(r.alpha_star);
  EXPECT_NEAR(*r.alpha_star, 0.5, 1e-12);
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    const bool between = i >= 50 && i < 59;
    EXPECT_EQ(*r.values[i], between ? 1.0 : 0.0) << r.grid[i];
  }
  cfg.groups = {0, 0};
  EXPECT_THROW(sweep_subsidy(cfg), Error);
}

TEST(Theory, UtilitySweepOneDimensional) {
  UtilitySweep1D u;
  u.negatives = {-1.0, -0.6, -0.3, -0.1};
  u.Z = {0.2, 0.8};
  u.recourse = [](double d) { return 0.8 * d + 0.1; };
  u.manipulation = [](double d) { return d; };
  u.grid = uniform_grid(101);
  const SweepResult r = sweep_utility_1d(u);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_GT(*r.values.back(), *r.values.front());
}

// Negative controls: each checker must fire when a hypothesis is broken.
TEST(Theory, NegativeControlZShrinkingWithSubsidy) {
  SweepConfig cfg = step_config();
  SweepResult r;
  r.grid = uniform_grid(11);
  for (double a : r.grid) {
    const FeatureSet Z = a < 0.7 ? cfg.Z : FeatureSet{};
    r.values.push_back(recourse_rate(Z, cfg.negatives, cfg.costs.with_subsidy(a)));
  }
  detail::monotone_violations(r, true);
  EXPECT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].alpha_lo, 0.6);
}

TEST(Theory, NegativeControlBrokenIdentity) {
  SweepResult r;
  r.grid = {0.0, 0.5, 1.0};
  r.values = {2.0, 1.0 + 1e-6, 0.0};
  detail::identity_violations(r);
  EXPECT_EQ(r.violations.size(), 1u);
}

TEST(Theory, NegativeControlUncalibratedUtility) {
  // A recourse target below the boundary has a negative delta, so more
  // subsidy lowers utility.
  UtilitySweep1D u;
  u.negatives = {-1.0};
  u.Z = {-0.5};
  u.recourse = [](double d) { return 2.0 * d; };
  u.manipulation = [](double) { return 5.0; };
  u.grid = uniform_grid(11);
  EXPECT_FALSE(sweep_utility_1d(u).violations.empty());
}

TEST(Theory, SweepRejectsBadGrids) {
  SweepConfig cfg = step_config();
  cfg.grid = {};
  EXPECT_THROW(sweep_subsidy(cfg), Error);
  cfg.grid = {0.0, 0.5, 0.5};
  EXPECT_THROW(sweep_subsidy(cfg), Error);
}

GameInstance chain_instance(double p) {
  GameInstance g;
  g.agent_ids = {0};
  g.own_candidate = {0};
  g.recourse_cost = Matrix(1, 3, 2.0);
  g.recourse_cost(0, 0) = 0.9;
  g.manipulation_cost = Matrix(1, 3, 0.1);
  g.manipulation_cost(0, 0) = 2.0;
  g.positive_manipulation_cost = Matrix(1, 0);
  g.q_original = {0.2};
  g.q_recourse = {0.9};
  g.p = p;
  g.validate();
  return g;
}

TEST(Theory, SubmodularMarginals) {
  const GameInstance g = chain_instance(0.7);
  const double at_a = expected_manipulators(g, {2}) - expected_manipulators(g, {});
  const double at_b = expected_manipulators(g, {1, 2}) - expected_manipulators(g, {1});
  EXPECT_NEAR(at_a, 0.7, 1e-15);
  EXPECT_NEAR(at_b, 0.7 * 0.3, 1e-15);
  EXPECT_EQ(sample_submodularity(g, 200, 1), 0u);

  const GameInstance zero = chain_instance(0.0);
  for (const std::vector<int>& s : {std::vector<int>{}, {1}, {1, 2}, {0, 1, 2}})
    EXPECT_EQ(expected_manipulators(zero, s), 0.0);
  EXPECT_THROW(sample_submodularity(g, 0, 1), Error);
}

TEST(Theory, SubmodularityOnRandomInstances) {
  Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    const GameInstance g = random_table_instance(rng, 12, 12, 2, 0.3 + 0.07 * t);
    EXPECT_EQ(sample_submodularity(g, 100, derive_seed(5, t)), 0u);
  }
}

TEST(Theory, RecourseOracleMatchesIlp) {
  Rng rng(77);
  for (int t = 0; t < 20; ++t) {
    const GameInstance g = random_table_instance(rng, 9, 8, t % 3, 1.0);
    for (std::size_t k = 0; k <= 3; ++k)
      EXPECT_EQ(exact_ilp_p1(g, k).value, static_cast<double>(brute_force_recourse_count_p1(g, k)));
  }
}

TEST(Theory, SuiteReportsNoViolations) {
  const auto checks = run_theorem_suite(7);
  ASSERT_EQ(checks.size(), 8u);
  for (const TheoremCheck& c : checks) {
    EXPECT_EQ(c.violations, 0u) << c.name;
    EXPECT_GT(c.instances, 0u) << c.name;
  }
  EXPECT_GE(checks[0].instances, 20u);
  EXPECT_GE(checks[0].comparisons, 1000u);
  EXPECT_EQ(checks[1].instances, 100u);
  EXPECT_EQ(checks[2].instances, 100u);
  for (std::size_t i = 3; i < 8; ++i) EXPECT_EQ(checks[i].instances, 50u) << checks[i].name;
}

}  // namespace
}  // namespace recourse
