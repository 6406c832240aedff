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

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "recourse/costs.hpp"
#include "recourse/metrics.hpp"
#include "recourse/model.hpp"
#include "recourse/optimizer.hpp"
#include "recourse/response.hpp"
#include "recourse/rng.hpp"

namespace recourse {

// ---------------------------------------------------------------------------
// Sign of per-action utility changes under a calibrated classifier.

struct SignViolation {
  int agent_id = 0;
  ActionKind kind = ActionKind::kNothing;
  double delta = 0.0;
};

inline std::vector<SignViolation> check_thm_signs(const GameOutcome& outcome,
                                                  const LinearClassifier& clf) {
  std::vector<SignViolation> out;
  for (const AgentOutcome& a : outcome.agents) {
    if (a.initially_positive) continue;
    if (a.action.kind == ActionKind::kRecourse) {
      const double delta = 2.0 * clf.qualification(*a.action.target) - 1.0;
      if (delta < 0.0) out.push_back({a.id, a.action.kind, delta});
    } else if (a.action.kind == ActionKind::kManipulate) {
      const double delta = 2.0 * clf.qualification(a.features) - 1.0;
      if (delta > 0.0) out.push_back({a.id, a.action.kind, delta});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subsidy sweeps over a fixed revealed set.

enum class SweepMetric { kRecourseRate, kSocialCost, kDiffCost, kDiffRec, kUtility };

inline const char* to_string(SweepMetric m) {
  switch (m) {
    case SweepMetric::kRecourseRate: return "rec_rate";
    case SweepMetric::kSocialCost: return "social_cost";
    case SweepMetric::kDiffCost: return "diff_cost";
    case SweepMetric::kDiffRec: return "diff_rec";
    case SweepMetric::kUtility: return "utility";
  }
  return "?";
}

inline constexpr double kIdentityRelativeTolerance = 1e-9;

struct SweepConfig {
  FeatureSet negatives;
  std::vector<int> groups;  // 0 / 1 per negative; read by the disparity metrics
  FeatureSet Z;
  LinearClassifier clf;
  CostModel costs;  // its subsidy is ignored; the grid supplies alpha
  std::vector<double> grid;
  SweepMetric metric = SweepMetric::kRecourseRate;
  double eps = kDefaultBoundaryOffset;
};

struct SweepViolation {
  double alpha_lo = 0.0;
  double alpha_hi = 0.0;
  double value_lo = 0.0;
  double value_hi = 0.0;
  std::string what;
};

struct SweepResult {
  std::vector<double> grid;
  std::vector<std::optional<double>> values;
  std::vector<SweepViolation> violations;
  std::optional<double> alpha_star;  // diff_rec only
};

inline std::vector<double> uniform_grid(std::size_t points) {
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i)
    g[i] = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
  return g;
}

namespace detail {

inline void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw Error(ErrorKind::kPrecondition, "empty subsidy grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw Error(ErrorKind::kPrecondition, "subsidy grid must be strictly increasing");
}

// Expected utility change of the open-mode response to Z.
inline double open_utility(const FeatureSet& Z, const FeatureSet& negatives,
                           const CostModel& cm, const LinearClassifier& clf) {
  double u = 0.0;
  for (const Vector& x : negatives) {
    const Action a = open_action(x, Z, cm);
    if (a.kind == ActionKind::kRecourse) u += 2.0 * clf.qualification(*a.target) - 1.0;
    if (a.kind == ActionKind::kManipulate) u += 2.0 * clf.qualification(x) - 1.0;
  }
  return u;
}

inline void monotone_violations(SweepResult& r, bool increasing, std::size_t from = 0) {
  for (std::size_t i = from + 1; i < r.values.size(); ++i) {
    if (!r.values[i - 1] || !r.values[i]) continue;
    const double a = *r.values[i - 1], b = *r.values[i];
    if (increasing ? b < a : b > a) {
      r.violations.push_back({r.grid[i - 1], r.grid[i], a, b,
                              increasing ? "decrease" : "increase"});
    }
  }
}

inline void identity_violations(SweepResult& r) {
  if (r.values.empty() || !r.values[0]) return;
  const double base = *r.values[0];
  const double a0 = r.grid[0];
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    if (!r.values[i]) continue;
    // value(alpha) = (1 - alpha) / (1 - alpha_0) * value(alpha_0)
    if (a0 >= 1.0) break;
    const double expected = (1.0 - r.grid[i]) / (1.0 - a0) * base;
    const double scale = std::max(std::abs(expected), std::abs(*r.values[i]));
    if (std::abs(*r.values[i] - expected) > kIdentityRelativeTolerance * scale &&
        std::abs(*r.values[i] - expected) > 1e-15) {
      r.violations.push_back({r.grid[i], r.grid[i], expected, *r.values[i], "identity"});
    }
  }
}

}  // namespace detail

inline SweepResult sweep_subsidy(const SweepConfig& config) {
  detail::check_grid(config.grid);
  const bool grouped =
      config.metric == SweepMetric::kDiffCost || config.metric == SweepMetric::kDiffRec;
  FeatureSet g0, g1;
  if (grouped) {
    if (config.groups.size() != config.negatives.size())
      throw Error(ErrorKind::kPrecondition, "one group tag per negative");
    for (std::size_t i = 0; i < config.negatives.size(); ++i)
      (config.groups[i] == 0 ? g0 : g1).push_back(config.negatives[i]);
    if (g0.empty() || g1.empty())
      throw Error(ErrorKind::kUndefinedMetric, "disparity sweep needs both groups");
  }
  FeatureSet targets, targets0, targets1;
  for (std::size_t i = 0; i < config.negatives.size(); ++i) {
    targets.push_back(optimal_recourse(config.negatives[i], config.clf, config.costs, config.eps));
    if (grouped) (config.groups[i] == 0 ? targets0 : targets1).push_back(targets.back());
  }

  SweepResult r;
  r.grid = config.grid;
  for (double alpha : config.grid) {
    const CostModel cm = config.costs.with_subsidy(alpha);
    std::optional<double> v;
    switch (config.metric) {
      case SweepMetric::kRecourseRate:
        v = recourse_rate(config.Z, config.negatives, cm);
        break;
      case SweepMetric::kSocialCost:
        v = social_cost(config.Z, config.negatives, targets, cm);
        break;
      case SweepMetric::kDiffCost: {
        const auto c0 = social_cost(config.Z, g0, targets0, cm);
        const auto c1 = social_cost(config.Z, g1, targets1, cm);
        if (c0 && c1) v = std::abs(*c1 - *c0);
        break;
      }
      case SweepMetric::kDiffRec:
        v = std::abs(recourse_rate(config.Z, g1, cm) - recourse_rate(config.Z, g0, cm));
        break;
      case SweepMetric::kUtility:
        v = detail::open_utility(config.Z, config.negatives, cm, config.clf);
        break;
    }
    r.values.push_back(v);
  }

  switch (config.metric) {
    case SweepMetric::kRecourseRate:
    case SweepMetric::kUtility:
      detail::monotone_violations(r, /*increasing=*/true);
      break;
    case SweepMetric::kSocialCost:
    case SweepMetric::kDiffCost:
      detail::identity_violations(r);
      detail::monotone_violations(r, /*increasing=*/false);
      break;
    case SweepMetric::kDiffRec: {
      // alpha* = last grid point where the disparity strictly rose.
      std::size_t star = 0;
      for (std::size_t i = 1; i < r.values.size(); ++i)
        if (*r.values[i] > *r.values[i - 1]) star = i;
      r.alpha_star = r.grid[star];
      // On a finite grid the tail past the last rise is non-increasing by
      // construction; the independent threshold-form rates give it teeth.
      detail::monotone_violations(r, /*increasing=*/false, star);
      for (std::size_t i = 0; i < r.grid.size(); ++i) {
        const CostModel cm = config.costs.with_subsidy(r.grid[i]);
        const double rate0 = static_cast<double>(recourse_count_by_threshold(config.Z, g0, cm)) /
                             static_cast<double>(g0.size());
        const double rate1 = static_cast<double>(recourse_count_by_threshold(config.Z, g1, cm)) /
                             static_cast<double>(g1.size());
        if (std::abs(rate1 - rate0) != *r.values[i])
          r.violations.push_back({r.grid[i], r.grid[i], std::abs(rate1 - rate0), *r.values[i],
                                  "threshold oracle mismatch"});
      }
      // Free recourse: every agent with a revealed target takes it, so the
      // disparity must vanish at alpha = 1.
      if (!config.Z.empty() && r.grid.back() == 1.0 && *r.values.back() != 0.0) {
        r.violations.push_back({1.0, 1.0, 0.0, *r.values.back(), "nonzero at alpha=1"});
      }
      break;
    }
  }
  return r;
}

// One-dimensional utility sweep with arbitrary distance-based costs:
// classifier 1[x >= threshold], q(x) = logistic(slope * (x - threshold)),
// c_R(x, z; alpha) = (1 - alpha) * recourse(|x - z|), c_M = manipulation(|x - z|).
struct UtilitySweep1D {
  std::vector<double> negatives;
  std::vector<double> Z;
  double threshold = 0.0;
  double slope = 1.0;
  std::function<double(double)> recourse;
  std::function<double(double)> manipulation;
  std::vector<double> grid;
};

inline SweepResult sweep_utility_1d(const UtilitySweep1D& s) {
  detail::check_grid(s.grid);
  auto q = [&](double x) { return logistic(s.slope * (x - s.threshold)); };
  SweepResult r;
  r.grid = s.grid;
  for (double alpha : s.grid) {
    double u = 0.0;
    for (double x : s.negatives) {
      std::optional<double> rc, mc;
      double rz = 0.0;
      for (double z : s.Z) {
        const double c = (1.0 - alpha) * s.recourse(std::abs(x - z));
        if (!rc || c < *rc) {
          rc = c;
          rz = z;
        }
        const double cm = s.manipulation(std::abs(x - z));
        if (!mc || cm < *mc) mc = cm;
      }
      const ActionKind kind = decide(rc, mc);
      if (kind == ActionKind::kRecourse) u += 2.0 * q(rz) - 1.0;
      if (kind == ActionKind::kManipulate) u += 2.0 * q(x) - 1.0;
    }
    r.values.push_back(u);
  }
  detail::monotone_violations(r, /*increasing=*/true);
  return r;
}

// ---------------------------------------------------------------------------
// Diminishing returns of the expected-manipulation objective.

// Draws chains A ⊆ B ⊆ candidates and z ∉ B, counting cases with
// u(A + z) - u(A) < u(B + z) - u(B) beyond 1e-12.
inline std::size_t sample_submodularity(const GameInstance& g, std::size_t trials,
                                        std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorKind::kPrecondition, "trials must be >= 1");
  const std::size_t m = g.num_candidates();
  if (m == 0) return 0;
  Rng rng(seed);
  std::size_t violations = 0;
  std::vector<int> perm(m);
  for (std::size_t t = 0; t < trials; ++t) {
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = m - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(i + 1));
      std::swap(perm[i], perm[std::min(j, i)]);
    }
    const int z = perm[0];
    const auto b = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(m));
    const auto a = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(b + 1));
    std::vector<int> B(perm.begin() + 1, perm.begin() + 1 + static_cast<std::ptrdiff_t>(b));
    std::vector<int> A(B.begin(), B.begin() + static_cast<std::ptrdiff_t>(std::min(a, b)));
    auto with = [z](std::vector<int> s) {
      s.push_back(z);
      return s;
    };
    const double gain_a = expected_manipulators(g, with(A)) - expected_manipulators(g, A);
    const double gain_b = expected_manipulators(g, with(B)) - expected_manipulators(g, B);
    violations += gain_a < gain_b - 1e-12;
  }
  return violations;
}

// ---------------------------------------------------------------------------
// Instance generators and brute-force oracles shared by the suite.

// Synthetic cost tables: candidate j is owned by agent j (j < m).
inline GameInstance random_table_instance(Rng& rng, std::size_t n, std::size_t m,
                                          std::size_t positives, double p) {
  GameInstance g;
  g.agent_ids.resize(n);
  std::iota(g.agent_ids.begin(), g.agent_ids.end(), 0);
  g.own_candidate.assign(n, kNoCandidate);
  g.recourse_cost = Matrix(n, m);
  g.manipulation_cost = Matrix(n, m);
  g.positive_manipulation_cost = Matrix(n, positives);
  g.q_original.resize(n);
  g.q_recourse.resize(n);
  g.p = p;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < m) g.own_candidate[i] = static_cast<int>(i);
    g.q_original[i] = uniform(rng, 0.0, 0.5);
    g.q_recourse[i] = uniform(rng, 0.5, 1.0);
    for (std::size_t j = 0; j < m; ++j) {
      g.recourse_cost(i, j) = j == i ? uniform(rng, 0.0, 1.3) : uniform(rng, 0.5, 2.0);
      g.manipulation_cost(i, j) = uniform(rng, 0.0, 1.5);
    }
    for (std::size_t l = 0; l < positives; ++l)
      g.positive_manipulation_cost(i, l) = uniform(rng, 0.3, 2.0);
  }
  g.validate();
  return g;
}

// Independent p = 1 oracle: evaluate every agent's best response from the
// raw tables for each size-k subset and keep the largest recourse count.
inline std::size_t brute_force_recourse_count_p1(const GameInstance& g, std::size_t k) {
  const std::size_t m = g.num_candidates();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::size_t count = 0;
    for (std::size_t i = 0; i < g.num_agents(); ++i) {
      const int own = g.own_candidate[i];
      std::optional<double> rc;
      if (own != kNoCandidate && ((mask >> own) & 1u)) rc = g.recourse_cost(i, own);
      std::optional<double> mc;
      for (std::size_t j = 0; j < m; ++j)
        if ((mask >> j) & 1u) mc = std::min(mc.value_or(INFINITY), g.manipulation_cost(i, j));
      for (double c : g.positive_manipulation_cost.row(i)) mc = std::min(mc.value_or(INFINITY), c);
      count += decide(rc, mc) == ActionKind::kRecourse;
    }
    best = std::max(best, count);
  }
  return best;
}

// Random Minimum k-Union instance where set j always contains element j.
inline KUnionInstance random_k_union(Rng& rng, std::size_t universe, std::size_t sets) {
  KUnionInstance mku;
  mku.universe_size = universe;
  for (std::size_t j = 0; j < sets; ++j) {
    std::vector<int> s{static_cast<int>(j)};
    for (std::size_t e = 0; e < universe; ++e)
      if (e != j && uniform01(rng) < 0.35) s.push_back(static_cast<int>(e));
    std::sort(s.begin(), s.end());
    mku.sets.push_back(std::move(s));
  }
  return mku;
}

// Two-group population near a random linear boundary, for subsidy sweeps.
struct SweepScenario {
  FeatureSet negatives;
  std::vector<int> groups;
  FeatureSet Z;
  LinearClassifier clf;
  CostModel costs;
};

inline SweepScenario random_sweep_scenario(Rng& rng, std::size_t per_group, std::size_t dim) {
  SweepScenario s;
  Vector w(dim);
  for (double& x : w) x = uniform(rng, -1.0, 1.0);
  w[0] = uniform(rng, 0.5, 1.5);
  s.clf = LinearClassifier(w, uniform(rng, -0.3, 0.3));
  s.costs = random_cost_model(dim, rng);
  std::size_t counts[2] = {0, 0};
  // Group 1 sits further from the boundary.
  while (counts[0] < per_group || counts[1] < per_group) {
    const int group = counts[0] < per_group ? (counts[1] < per_group ? int(uniform01(rng) < 0.5) : 0) : 1;
    Vector x(dim);
    for (double& v : x) v = normal01(rng) * 0.8;
    x[0] -= group == 1 ? 0.6 : 0.0;
    if (s.clf.predict(x) == 1) continue;
    s.negatives.push_back(x);
    s.groups.push_back(group);
    ++counts[group];
  }
  const std::size_t zsize = 1 + static_cast<std::size_t>(uniform01(rng) * 6.0);
  while (s.Z.size() < zsize) {
    Vector x(dim);
    for (double& v : x) v = normal01(rng);
    if (s.clf.predict(x) == 1) s.Z.push_back(x);
  }
  // A few released recourse actions on the boundary as well.
  for (std::size_t i = 0; i < s.negatives.size(); i += 7)
    s.Z.push_back(optimal_recourse(s.negatives[i], s.clf, s.costs));
  return s;
}

// ---------------------------------------------------------------------------
// Suite report: one line per theorem.

struct TheoremCheck {
  std::string name;
  std::size_t instances = 0;
  std::size_t comparisons = 0;
  std::size_t violations = 0;
};

inline TheoremCheck check_submodularity(std::uint64_t seed, std::size_t instances = 30,
                                        std::size_t trials = 100) {
  TheoremCheck c{"submodular_expected_manipulation", 0, 0, 0};
  Rng rng(seed);
  const double ps[] = {0.3, 0.7, 1.0};
  for (std::size_t t = 0; t < instances; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(uniform01(rng) * 11.0);  // 2..12
    const GameInstance g = random_table_instance(rng, n, n, static_cast<std::size_t>(uniform01(rng) * 3.0), ps[t % 3]);
    c.violations += sample_submodularity(g, trials, rng());
    c.comparisons += trials;
    ++c.instances;
  }
  return c;
}

inline TheoremCheck check_ilp_exactness(std::uint64_t seed, std::size_t instances = 100) {
  TheoremCheck c{"ilp_p1_exact", 0, 0, 0};
  Rng rng(seed);
  for (std::size_t t = 0; t < instances; ++t) {
    const std::size_t m = 1 + static_cast<std::size_t>(uniform01(rng) * 10.0);  // 1..10
    const std::size_t n = m + static_cast<std::size_t>(uniform01(rng) * 3.0);
    const GameInstance g = random_table_instance(rng, n, m, static_cast<std::size_t>(uniform01(rng) * 3.0), 1.0);
    for (std::size_t k = 0; k <= std::min<std::size_t>(3, m); ++k) {
      const auto ilp = exact_ilp_p1(g, k);
      const auto oracle = brute_force_recourse_count_p1(g, k);
      c.violations += static_cast<std::size_t>(ilp.value) != oracle || ilp.subset.size() != k;
      ++c.comparisons;
    }
    ++c.instances;
  }
  return c;
}

inline TheoremCheck check_k_union_reduction(std::uint64_t seed, std::size_t instances = 100) {
  TheoremCheck c{"min_k_union_reduction", 0, 0, 0};
  Rng rng(seed);
  for (std::size_t t = 0; t < instances; ++t) {
    const std::size_t universe = 2 + static_cast<std::size_t>(uniform01(rng) * 7.0);  // 2..8
    const std::size_t sets = 1 + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(std::min<std::size_t>(6, universe)));
    const KUnionInstance mku = random_k_union(rng, universe, std::min(sets, universe));
    const std::size_t m = mku.sets.size();
    const std::size_t k = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(m + 1));
    const GameInstance g = mku_to_instance(mku, k);
    // Every reveal set of size k: manipulators = |union| - k.
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      std::vector<int> subset;
      for (std::size_t j = 0; j < m; ++j)
        if ((mask >> j) & 1u) subset.push_back(static_cast<int>(j));
      const CertainOutcome o = certain_outcome(g, subset);
      c.violations += o.manipulate != union_size(mku, subset) - k || o.recourse != k;
      ++c.comparisons;
    }
    // The game optimum (exactly k releases) attains the minimum union.
    const Selection game = brute_force_select(g, k, Objective::kUtility, Cardinality::kExactly);
    const Selection oracle = brute_force_min_k_union(mku, k);
    c.violations += union_size(mku, game.subset) != static_cast<std::size_t>(oracle.value);
    ++c.comparisons;
    ++c.instances;
  }
  return c;
}

struct SubsidyChecks {
  TheoremCheck rec_rate{"subsidy_recourse_rate_nondecreasing", 0, 0, 0};
  TheoremCheck social_cost{"subsidy_social_cost_identity", 0, 0, 0};
  TheoremCheck diff_cost{"subsidy_cost_disparity_identity", 0, 0, 0};
  TheoremCheck diff_rec{"subsidy_rate_disparity_tail", 0, 0, 0};
  TheoremCheck utility{"subsidy_utility_1d_nondecreasing", 0, 0, 0};
};

inline SubsidyChecks check_subsidy_theorems(std::uint64_t seed, std::size_t instances = 50) {
  SubsidyChecks out;
  Rng rng(seed);
  const auto grid11 = uniform_grid(11);
  const auto grid101 = uniform_grid(101);
  auto tally = [](TheoremCheck& c, const SweepResult& r) {
    ++c.instances;
    c.comparisons += r.values.size();
    c.violations += r.violations.size();
  };
  for (std::size_t t = 0; t < instances; ++t) {
    const SweepScenario s = random_sweep_scenario(rng, 15 + static_cast<std::size_t>(uniform01(rng) * 10.0), 2);
    SweepConfig cfg{s.negatives, s.groups, s.Z, s.clf, s.costs, grid11, SweepMetric::kRecourseRate};
    tally(out.rec_rate, sweep_subsidy(cfg));
    cfg.metric = SweepMetric::kSocialCost;
    tally(out.social_cost, sweep_subsidy(cfg));
    cfg.metric = SweepMetric::kDiffCost;
    tally(out.diff_cost, sweep_subsidy(cfg));
    cfg.metric = SweepMetric::kDiffRec;
    cfg.grid = grid101;
    tally(out.diff_rec, sweep_subsidy(cfg));

    UtilitySweep1D u;
    for (int i = 0; i < 40; ++i) u.negatives.push_back(uniform(rng, -2.0, 0.0));
    const std::size_t zsize = 1 + static_cast<std::size_t>(uniform01(rng) * 4.0);
    for (std::size_t i = 0; i < zsize; ++i) u.Z.push_back(uniform(rng, 0.0, 1.0));
    u.slope = uniform(rng, 0.5, 3.0);
    const double wr = uniform(rng, 0.2, 1.0);
    const double wm = uniform(rng, 0.5, 1.5);
    const double b = t % 2 == 0 ? 0.0 : uniform(rng, 0.0, 0.5);
    // Both costs increase in distance; affine recourse crosses the linear
    // manipulation cost at most once.
    u.recourse = [wr, b](double d) { return wr * d + b; };
    u.manipulation = [wm](double d) { return wm * d; };
    u.grid = grid101;
    tally(out.utility, sweep_utility_1d(u));
  }
  return out;
}

inline std::vector<TheoremCheck> run_theorem_suite(std::uint64_t seed) {
  std::vector<TheoremCheck> checks;
  checks.push_back(check_submodularity(derive_seed(seed, 1)));
  checks.push_back(check_ilp_exactness(derive_seed(seed, 2)));
  checks.push_back(check_k_union_reduction(derive_seed(seed, 3)));
  const SubsidyChecks sub = check_subsidy_theorems(derive_seed(seed, 4));
  for (const TheoremCheck* c : {&sub.rec_rate, &sub.social_cost, &sub.diff_cost, &sub.diff_rec, &sub.utility})
    checks.push_back(*c);
  return checks;
}

}  // namespace recourse
