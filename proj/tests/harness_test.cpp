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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "recourse/harness.hpp"

namespace recourse {
namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.synthetic = {150, 1, 1.0, 5};
  c.runs = 2;
  c.subsidies = {0.0};
  c.provision_fractions = {0.0, 1.0};
  c.sample_size = 0;
  c.base_seed = 3;
  return c;
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(Harness, RowCountArithmetic) {
  const ExperimentResult r = run_experiment(small_config());
  EXPECT_EQ(r.reports.size(), 4u);
  EXPECT_EQ(r.aggregates.size(), 2u);
  const std::string csv = results_csv(r);
  EXPECT_EQ(count_lines(csv), 1u + 4u + 2u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kResultsCsvHeader);
  EXPECT_EQ(count_lines(summary_csv(r)), 1u + 2u * std::size(kReportedMetrics));

  ExperimentConfig one = small_config();
  one.runs = 1;
  const ExperimentResult single = run_experiment(one);
  EXPECT_EQ(single.reports.size(), 2u);
  EXPECT_TRUE(single.aggregates.empty());
}

TEST(Harness, NoProvisionMeansNoGatedRecourse) {
  ExperimentConfig c = small_config();
  c.response_mode = ResponseMode::kGated;
  c.subsidies = {0.0, 0.5, 1.0};
  for (const MetricsReport& m : run_experiment(c).reports)
    if (m.provision_fraction == 0.0) {
      EXPECT_EQ(*m.recourse_rate, 0.0);
    }
}

TEST(Harness, FullSubsidyAndProvisionGivesFullRecourse) {
  ExperimentConfig c = small_config();
  c.subsidies = {1.0};
  c.provision_fractions = {1.0};
  c.runs = 3;
  const ExperimentResult r = run_experiment(c);
  for (const MetricsReport& m : r.reports) {
    ASSERT_TRUE(m.social_cost) << "some target must be revealed at p = 0.7";
    EXPECT_EQ(*m.recourse_rate, 1.0);
    EXPECT_EQ(*m.manipulation_rate, 0.0);
    EXPECT_EQ(*m.social_cost, 0.0);
  }
}

TEST(Harness, ProvisionCount) {
  EXPECT_EQ(provision_count(0.0, 10), 0u);
  EXPECT_EQ(provision_count(0.3, 10), 3u);  // 0.3 * 10 is a hair above 3
  EXPECT_EQ(provision_count(0.25, 10), 3u);
  EXPECT_EQ(provision_count(1.0, 7), 7u);
  EXPECT_EQ(provision_count(0.01, 7), 1u);
}

TEST(Harness, PlayRoundModes) {
  std::vector<Agent> agents{{0, {0.2}, 0, "g0"}, {1, {0.9}, 1, "g0"}, {2, {0.45}, 0, "g1"}};
  const Population pop(agents, {"g0", "g1"});
  const LinearClassifier clf({1.0}, -0.5);
  const CostModel cm({2.0}, {1.0});
  const std::map<int, Vector> released{{0, {0.5}}};
  RevealState hidden;
  hidden.selected_recourse = released;
  const GameOutcome gated = play_round(pop, clf, cm, released, hidden, ResponseMode::kGated);
  ASSERT_EQ(gated.agents.size(), 3u);
  EXPECT_EQ(gated.agents[0].action.kind, ActionKind::kRecourse);  // 0.6 < 1, nothing to imitate
  EXPECT_TRUE(gated.agents[1].initially_positive);
  EXPECT_EQ(gated.agents[2].action.kind, ActionKind::kNothing);
  const GameOutcome open = play_round(pop, clf, cm, released, hidden, ResponseMode::kOpen);
  EXPECT_EQ(open.agents[0].action.kind, ActionKind::kNothing);  // Z is empty
  EXPECT_EQ(count_actions(gated).negatives, 2u);
  const std::string g1 = "g1";
  EXPECT_EQ(count_actions(gated, &g1).negatives, 1u);
  EXPECT_EQ(count_actions(gated).recourse, 1u);
}

TEST(Harness, SynthIsDeterministic) {
  const SyntheticSpec spec{100, 2, 1.0, 9};
  std::ostringstream a, b;
  write_population_csv(a, synth_population(spec));
  write_population_csv(b, synth_population(spec));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "f0,f1,label,group");
  EXPECT_THROW(synth_population({3, 2, 1.0, 0}), Error);
  EXPECT_THROW(synth_population({10, 0, 1.0, 0}), Error);
}

// Mean classifier score of each group's negatively classified members.
std::pair<double, double> negative_scores(const Population& pop) {
  const LinearClassifier clf = train_linear(pop);
  double s[2] = {0, 0};
  int n[2] = {0, 0};
  for (const Agent& a : pop.agents()) {
    if (clf.predict(a.features) == 1) continue;
    const int g = a.group == "g1";
    s[g] += clf.score(a.features);
    ++n[g];
  }
  return {s[0] / n[0], s[1] / n[1]};
}

TEST(Harness, SynthShiftSeparatesGroups) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto [g0, g1] = negative_scores(synth_population({100, 2, 1.0, seed}));
    EXPECT_LT(g1, g0) << "disadvantaged negatives sit further from the boundary";
  }
  // Without a shift the groups are exchangeable: differences average out.
  double diff = 0.0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto [g0, g1] = negative_scores(synth_population({100, 1, 0.0, seed}));
    diff += g1 - g0;
  }
  EXPECT_NEAR(diff / 40.0, 0.0, 0.15);
}

TEST(Harness, ConfigParsing) {
  std::istringstream in(
      "# sweep\n"
      "p = 0.5\n"
      "subsidies = 0, 0.5 ,1\n"
      "provision_fractions = 0.1\n"
      "runs = 4   # trailing comment\n"
      "optimizer = localsearch\n"
      "response_mode = gated\n"
      "synthetic.n = 50\n");
  const ExperimentConfig c = parse_config(in);
  EXPECT_EQ(c.p, 0.5);
  EXPECT_EQ(c.subsidies, (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(c.runs, 4u);
  EXPECT_EQ(c.optimizer, OptimizerKind::kLocalSearch);
  EXPECT_EQ(c.response_mode, ResponseMode::kGated);
  EXPECT_EQ(c.synthetic.n, 50u);

  std::ostringstream out;
  write_config(out, c);
  std::istringstream back(out.str());
  std::ostringstream again;
  write_config(again, parse_config(back));
  EXPECT_EQ(out.str(), again.str());
}

void expect_config_error(const std::string& text, const std::string& field) {
  std::istringstream in(text);
  try {
    parse_config(in);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig);
    EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
  }
}

TEST(Harness, ConfigErrorsNameTheField) {
  expect_config_error("p = 1.5\n", "'p'");
  expect_config_error("runs = 0\n", "'runs'");
  expect_config_error("runs = -3\n", "'runs'");
  expect_config_error("subsidies = 0, x\n", "'subsidies'");
  expect_config_error("provision_fractions = 1.2\n", "'provision_fractions'");
  expect_config_error("optimizer = magic\n", "'optimizer'");
  expect_config_error("optimizer = ilp_p1\n", "'optimizer'");
  expect_config_error("response_mode = sideways\n", "'response_mode'");
  expect_config_error("colour = red\n", "'colour'");
  expect_config_error("p = 0.1\np = 0.2\n", "'p'");
  expect_config_error("dataset = data.csv\n", "'dataset.features'");
  expect_config_error("sample_size = 1\n", "'sample_size'");
  expect_config_error("no equals sign\n", "line 1");
  EXPECT_THROW(load_config("/nonexistent/config.cfg"), Error);
}

TEST(Harness, OptimizersRunEndToEnd) {
  for (OptimizerKind o : {OptimizerKind::kBruteForce, OptimizerKind::kGreedy,
                          OptimizerKind::kLocalSearch, OptimizerKind::kRandomK, OptimizerKind::kIlpP1}) {
    ExperimentConfig c = small_config();
    c.optimizer = o;
    c.sample_size = 30;  // keeps brute force within its candidate limit
    c.provision_fractions = {0.0, 0.3};
    if (o == OptimizerKind::kIlpP1) c.p = 1.0;
    ExperimentResult r;
    try {
      r = run_experiment(c);
    } catch (const Error& e) {
      // Brute force refuses more than 20 candidates; a 30-agent sample can exceed that.
      ASSERT_EQ(o, OptimizerKind::kBruteForce) << e.what();
      continue;
    }
    EXPECT_EQ(r.reports.size(), 4u) << to_string(o);
    EXPECT_EQ(r.sign_violations, 0u);
    EXPECT_NE(r.reports[0].mode.find(to_string(o)), std::string::npos);
  }
}

TEST(Harness, GreedyMatchesDirectSelection) {
  // Reusing one greedy order across fractions must match per-k greedy calls.
  ExperimentConfig c = small_config();
  c.provision_fractions = {0.2, 0.5};
  c.runs = 1;
  const ExperimentResult a = run_experiment(c);
  c.optimizer = OptimizerKind::kLocalSearch;
  c.local_search_iters = 0;  // local search with no moves is plain greedy
  const ExperimentResult b = run_experiment(c);
  for (std::size_t i = 0; i < a.reports.size(); ++i)
    EXPECT_EQ(*a.reports[i].utility_expected, *b.reports[i].utility_expected);
}

TEST(Harness, OutputsAreByteIdentical) {
  const auto dir = std::filesystem::temp_directory_path() / "recourse_harness_test";
  std::filesystem::remove_all(dir);
  ExperimentConfig c = small_config();
  c.subsidies = {0.0, 1.0};
  const ExperimentResult r1 = run_experiment(c), r2 = run_experiment(c);
  EXPECT_EQ(results_csv(r1), results_csv(r2));
  EXPECT_EQ(summary_csv(r1), summary_csv(r2));
  write_outputs(dir.string(), c, r1, "fixed");
  for (const char* f : {"results.csv", "summary.csv", "metadata.txt"})
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  std::ifstream in(dir / "results.csv");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), results_csv(r1));
  std::filesystem::remove_all(dir);
}

TEST(Harness, SeedsChangeResults) {
  ExperimentConfig c = small_config();
  c.provision_fractions = {0.5};
  const std::string a = results_csv(run_experiment(c));
  c.base_seed = 4;
  EXPECT_NE(a, results_csv(run_experiment(c)));
}

}  // namespace
}  // namespace recourse
