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
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "recourse/costs.hpp"
#include "recourse/error.hpp"
#include "recourse/model.hpp"
#include "recourse/response.hpp"
#include "recourse/rng.hpp"
#include "recourse/vec.hpp"

namespace recourse {

// Row-major dense matrix of non-negative costs.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline constexpr int kNoCandidate = -1;

// The system's decision problem over materialized cost tables. Agents are
// the negatively classified population; candidate j is a recourse action the
// system may release; positives are initially positive features that are
// revealed independently of the system's choice.
struct GameInstance {
  std::vector<int> agent_ids;
  std::vector<int> own_candidate;  // per agent: candidate index or kNoCandidate
  Matrix recourse_cost;            // agents x candidates, subsidy applied
  Matrix manipulation_cost;        // agents x candidates
  Matrix positive_manipulation_cost;  // agents x positives
  std::vector<double> q_original;     // q(x)
  std::vector<double> q_recourse;     // q(x_R(x)), only read when own exists
  double p = 1.0;

  std::size_t num_agents() const { return agent_ids.size(); }
  std::size_t num_candidates() const { return recourse_cost.cols(); }
  std::size_t num_positives() const { return positive_manipulation_cost.cols(); }

  double own_recourse_cost(std::size_t i) const {
    const int own = own_candidate[i];
    return own == kNoCandidate ? std::numeric_limits<double>::infinity()
                               : recourse_cost(i, static_cast<std::size_t>(own));
  }

  // Expected change in system utility if agent i takes recourse /
  // manipulates, relative to doing nothing.
  double recourse_delta(std::size_t i) const { return 2.0 * q_recourse[i] - 1.0; }
  double manipulation_delta(std::size_t i) const { return 2.0 * q_original[i] - 1.0; }

  void validate() const {
    const std::size_t n = num_agents();
    auto fail = [](const std::string& msg) { throw Error(ErrorKind::kPrecondition, "GameInstance: " + msg); };
    if (own_candidate.size() != n || q_original.size() != n || q_recourse.size() != n)
      fail("per-agent vectors must have one entry per agent");
    if (recourse_cost.rows() != n || manipulation_cost.rows() != n ||
        positive_manipulation_cost.rows() != n)
      fail("cost tables must have one row per agent");
    if (manipulation_cost.cols() != recourse_cost.cols())
      fail("recourse and manipulation tables must share candidate columns");
    if (!(p >= 0.0 && p <= 1.0)) fail("p must lie in [0, 1]");
    for (std::size_t i = 0; i < n; ++i) {
      if (own_candidate[i] != kNoCandidate &&
          (own_candidate[i] < 0 || static_cast<std::size_t>(own_candidate[i]) >= num_candidates()))
        fail("own candidate index out of range");
      if (!(q_original[i] >= 0.0 && q_original[i] <= 1.0) ||
          !(q_recourse[i] >= 0.0 && q_recourse[i] <= 1.0))
        fail("qualification values must lie in [0, 1]");
      for (const Matrix* m : {&recourse_cost, &manipulation_cost, &positive_manipulation_cost})
        for (double c : m->row(i))
          if (!(c >= 0.0) || std::isnan(c)) fail("costs must be non-negative");
    }
  }

  bool operator==(const GameInstance&) const = default;
};

// Geometric instance: one candidate per negative agent (its optimal
// recourse), every candidate owned by the agent it was computed for.
inline GameInstance build_geometric_instance(const std::vector<int>& agent_ids,
                                             const FeatureSet& negatives,
                                             const FeatureSet& recourse_targets,
                                             const FeatureSet& positives,
                                             const LinearClassifier& clf,
                                             const CostModel& cm, double p) {
  const std::size_t n = negatives.size();
  if (agent_ids.size() != n || recourse_targets.size() != n) {
    throw Error(ErrorKind::kPrecondition, "one id and one recourse target per negative agent");
  }
  GameInstance g;
  g.agent_ids = agent_ids;
  g.own_candidate.resize(n);
  g.recourse_cost = Matrix(n, n);
  g.manipulation_cost = Matrix(n, n);
  g.positive_manipulation_cost = Matrix(n, positives.size());
  g.q_original.resize(n);
  g.q_recourse.resize(n);
  g.p = p;
  for (std::size_t i = 0; i < n; ++i) {
    g.own_candidate[i] = static_cast<int>(i);
    g.q_original[i] = clf.qualification(negatives[i]);
    g.q_recourse[i] = clf.qualification(recourse_targets[i]);
    for (std::size_t j = 0; j < n; ++j) {
      g.recourse_cost(i, j) = cm.recourse_cost(negatives[i], recourse_targets[j]);
      g.manipulation_cost(i, j) = cm.manipulation_cost(negatives[i], recourse_targets[j]);
    }
    for (std::size_t l = 0; l < positives.size(); ++l) {
      g.positive_manipulation_cost(i, l) = cm.manipulation_cost(negatives[i], positives[l]);
    }
  }
  g.validate();
  return g;
}

// Which scalar the selectors maximize.
//   kUtility              expected sum of per-agent utility changes (gated)
//   kRecourseCount       expected number of agents taking recourse
//   kExpectedManipulation minus the fixed-manipulation-set surrogate u(Z)
enum class Objective { kUtility, kRecourseCount, kExpectedManipulation };

inline const char* to_string(Objective o) {
  switch (o) {
    case Objective::kUtility: return "utility";
    case Objective::kRecourseCount: return "recourse_count";
    case Objective::kExpectedManipulation: return "expected_manipulation";
  }
  return "?";
}

enum class Cardinality { kAtMost, kExactly };

// Fixed per-agent manipulation set: candidates whose manipulation cost is
// strictly below what the agent's own recourse would cost (capped at 1).
// Agents without an affordable own action compare against the cap alone.
inline double manipulation_threshold(const GameInstance& g, std::size_t i) {
  return std::min(kActionCostCap, g.own_recourse_cost(i));
}

inline std::vector<std::vector<int>> manipulation_sets(const GameInstance& g) {
  std::vector<std::vector<int>> sets(g.num_agents());
  for (std::size_t i = 0; i < g.num_agents(); ++i) {
    const double t = manipulation_threshold(g, i);
    for (std::size_t j = 0; j < g.num_candidates(); ++j) {
      if (g.manipulation_cost(i, j) < t) sets[i].push_back(static_cast<int>(j));
    }
  }
  return sets;
}

// 1 - (1 - p)^{|S_m ∩ chosen|}
inline double expected_manipulation_prob(const std::vector<int>& manipulation_set,
                                         const std::vector<int>& chosen, double p) {
  std::size_t overlap = 0;
  for (int j : chosen) {
    overlap += std::binary_search(manipulation_set.begin(), manipulation_set.end(), j);
  }
  return 1.0 - std::pow(1.0 - p, static_cast<double>(overlap));
}

// Incrementally maintained objective over a chosen candidate set. Each
// agent's outcome only depends on how many revealable points (chosen
// candidates plus positives) would undercut its reference cost, so the
// expectation over independent reveals is closed form:
//   P(no cheaper manipulation revealed) = (1 - p)^count.
class ChoiceState {
 public:
  ChoiceState(const GameInstance& g, Objective objective)
      : g_(&g), objective_(objective) {
    const std::size_t n = g.num_agents();
    const std::size_t m = g.num_candidates();
    chosen_.assign(m, false);
    provided_.assign(n, false);
    cnt_cap_.assign(n, 0);
    cnt_thr_.assign(n, 0);
    pos_cap_.assign(n, 0);
    pos_thr_.assign(n, 0);
    threshold_.resize(n);
    can_recourse_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      threshold_[i] = manipulation_threshold(g, i);
      can_recourse_[i] = g.own_recourse_cost(i) < kActionCostCap;
      for (double c : g.positive_manipulation_cost.row(i)) {
        pos_cap_[i] += c < kActionCostCap;
        pos_thr_[i] += c < threshold_[i];
      }
    }
    stay_.resize(m + g.num_positives() + 1);
    for (std::size_t c = 0; c < stay_.size(); ++c) {
      stay_[c] = std::pow(1.0 - g.p, static_cast<double>(c));
    }
    owners_.assign(m, {});
    for (std::size_t i = 0; i < n; ++i) {
      if (g.own_candidate[i] != kNoCandidate) owners_[g.own_candidate[i]].push_back(i);
    }
    values_.resize(n);
    for (std::size_t i = 0; i < n; ++i) values_[i] = agent_value(i, false, 0, 0);
  }

  double value() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
  }

  bool contains(std::size_t j) const { return chosen_[j]; }
  std::size_t size() const { return size_; }

  std::vector<int> subset() const {
    std::vector<int> out;
    for (std::size_t j = 0; j < chosen_.size(); ++j)
      if (chosen_[j]) out.push_back(static_cast<int>(j));
    return out;
  }

  // Objective change from toggling candidate j (add if absent, drop if present).
  double toggle_gain(std::size_t j) const {
    const int sign = chosen_[j] ? -1 : 1;
    double gain = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const auto [d_cap, d_thr] = deltas(i, j, sign);
      const bool owner = g_->own_candidate[i] == static_cast<int>(j);
      if (d_cap == 0 && d_thr == 0 && !owner) continue;
      const bool prov = owner ? !chosen_[j] : provided_[i];
      gain += agent_value(i, prov, cnt_cap_[i] + d_cap, cnt_thr_[i] + d_thr) - values_[i];
    }
    return gain;
  }

  // Gain of dropping `out` and adding `in` (out chosen, in not).
  double swap_gain(std::size_t out, std::size_t in) const {
    double gain = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const auto [c1, t1] = deltas(i, out, -1);
      const auto [c2, t2] = deltas(i, in, 1);
      const int own = g_->own_candidate[i];
      const bool touched = own == static_cast<int>(out) || own == static_cast<int>(in);
      if (!touched && c1 + c2 == 0 && t1 + t2 == 0) continue;
      bool prov = provided_[i];
      if (own == static_cast<int>(out)) prov = false;
      if (own == static_cast<int>(in)) prov = true;
      gain += agent_value(i, prov, cnt_cap_[i] + c1 + c2, cnt_thr_[i] + t1 + t2) - values_[i];
    }
    return gain;
  }

  void toggle(std::size_t j) {
    const int sign = chosen_[j] ? -1 : 1;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const auto [d_cap, d_thr] = deltas(i, j, sign);
      cnt_cap_[i] += d_cap;
      cnt_thr_[i] += d_thr;
    }
    for (std::size_t i : owners_[j]) provided_[i] = sign > 0;
    chosen_[j] = sign > 0;
    size_ += sign > 0 ? 1 : -1;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      values_[i] = agent_value(i, provided_[i], cnt_cap_[i], cnt_thr_[i]);
    }
  }

  void set(const std::vector<int>& subset) {
    for (int j : subset) {
      if (j < 0 || static_cast<std::size_t>(j) >= chosen_.size())
        throw Error(ErrorKind::kPrecondition, "candidate index out of range");
      if (!chosen_[j]) toggle(static_cast<std::size_t>(j));
    }
  }

 private:
  std::pair<int, int> deltas(std::size_t i, std::size_t j, int sign) const {
    const double c = g_->manipulation_cost(i, j);
    return {c < kActionCostCap ? sign : 0, c < threshold_[i] ? sign : 0};
  }

  double agent_value(std::size_t i, bool provided, int cnt_cap, int cnt_thr) const {
    const bool recourse_live = provided && can_recourse_[i];
    switch (objective_) {
      case Objective::kUtility: {
        const double stay = recourse_live ? stay_[cnt_thr + pos_thr_[i]]
                                          : stay_[cnt_cap + pos_cap_[i]];
        return (1.0 - stay) * g_->manipulation_delta(i) +
               (recourse_live ? stay * g_->recourse_delta(i) : 0.0);
      }
      case Objective::kRecourseCount:
        return recourse_live ? stay_[cnt_thr + pos_thr_[i]] : 0.0;
      case Objective::kExpectedManipulation:
        return -(1.0 - stay_[can_recourse_[i] ? cnt_thr : cnt_cap]);
    }
    return 0.0;
  }

  const GameInstance* g_;
  Objective objective_;
  std::vector<bool> chosen_;
  std::vector<bool> provided_;
  std::vector<int> cnt_cap_, cnt_thr_, pos_cap_, pos_thr_;
  std::vector<double> threshold_;
  std::vector<bool> can_recourse_;
  std::vector<double> stay_;
  std::vector<std::vector<std::size_t>> owners_;
  std::vector<double> values_;
  std::size_t size_ = 0;
};

inline double objective_value(const GameInstance& g, const std::vector<int>& chosen,
                              Objective objective) {
  ChoiceState s(g, objective);
  s.set(chosen);
  return s.value();
}

// Expected total utility change over reveal draws, gated semantics.
inline double expected_utility(const std::vector<int>& chosen, const GameInstance& g) {
  return objective_value(g, chosen, Objective::kUtility);
}

// u(Z): expected number of agents whose fixed manipulation set meets the
// revealed part of `chosen`.
inline double expected_manipulators(const GameInstance& g, const std::vector<int>& chosen) {
  return -objective_value(g, chosen, Objective::kExpectedManipulation);
}

namespace detail {

// Realized gated outcome for one reveal pattern. `revealed_candidates` and
// `revealed_positives` are 0/1 masks.
inline double realized_delta(const GameInstance& g, const std::vector<bool>& chosen,
                             const std::vector<bool>& revealed_candidates,
                             const std::vector<bool>& revealed_positives,
                             std::size_t* recourse = nullptr,
                             std::size_t* manipulate = nullptr) {
  double total = 0.0;
  for (std::size_t i = 0; i < g.num_agents(); ++i) {
    std::optional<double> rc;
    const int own = g.own_candidate[i];
    if (own != kNoCandidate && chosen[own]) rc = g.recourse_cost(i, own);
    std::optional<double> mc;
    for (std::size_t j = 0; j < g.num_candidates(); ++j) {
      if (revealed_candidates[j] && (!mc || g.manipulation_cost(i, j) < *mc))
        mc = g.manipulation_cost(i, j);
    }
    for (std::size_t l = 0; l < g.num_positives(); ++l) {
      if (revealed_positives[l] && (!mc || g.positive_manipulation_cost(i, l) < *mc))
        mc = g.positive_manipulation_cost(i, l);
    }
    switch (decide(rc, mc)) {
      case ActionKind::kRecourse:
        total += g.recourse_delta(i);
        if (recourse) ++*recourse;
        break;
      case ActionKind::kManipulate:
        total += g.manipulation_delta(i);
        if (manipulate) ++*manipulate;
        break;
      case ActionKind::kNothing:
        break;
    }
  }
  return total;
}

inline std::vector<bool> mask_of(const std::vector<int>& subset, std::size_t m) {
  std::vector<bool> mask(m, false);
  for (int j : subset) mask.at(static_cast<std::size_t>(j)) = true;
  return mask;
}

}  // namespace detail

inline constexpr std::size_t kMaxEnumeratedReveals = 16;

// Same expectation by explicit enumeration of all reveal outcomes over
// chosen candidates and positives. Limited to kMaxEnumeratedReveals elements.
inline double expected_utility_enumerated(const std::vector<int>& chosen,
                                          const GameInstance& g) {
  const std::size_t m = g.num_candidates();
  const std::size_t P = g.num_positives();
  const std::size_t e = chosen.size() + P;
  if (e > kMaxEnumeratedReveals) {
    throw Error(ErrorKind::kUnsupported, "too many revealable elements to enumerate");
  }
  const std::vector<bool> chosen_mask = detail::mask_of(chosen, m);
  double expectation = 0.0;
  for (std::uint32_t pattern = 0; pattern < (1u << e); ++pattern) {
    std::vector<bool> rc(m, false), rp(P, false);
    double prob = 1.0;
    for (std::size_t b = 0; b < e; ++b) {
      const bool on = (pattern >> b) & 1u;
      prob *= on ? g.p : 1.0 - g.p;
      if (!on) continue;
      if (b < chosen.size()) rc[chosen[b]] = true;
      else rp[b - chosen.size()] = true;
    }
    if (prob == 0.0) continue;
    expectation += prob * detail::realized_delta(g, chosen_mask, rc, rp);
  }
  return expectation;
}

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

inline MonteCarloEstimate expected_utility_monte_carlo(const std::vector<int>& chosen,
                                                       const GameInstance& g,
                                                       std::size_t samples,
                                                       std::uint64_t seed) {
  if (samples < 2) throw Error(ErrorKind::kPrecondition, "need at least 2 samples");
  const std::size_t m = g.num_candidates();
  const std::vector<bool> chosen_mask = detail::mask_of(chosen, m);
  Rng rng(seed);
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<bool> rc(m, false), rp(g.num_positives(), false);
    for (int j : chosen) rc[j] = uniform01(rng) < g.p;
    for (std::size_t l = 0; l < rp.size(); ++l) rp[l] = uniform01(rng) < g.p;
    const double v = detail::realized_delta(g, chosen_mask, rc, rp);
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

// Recourse and manipulation counts when every chosen candidate and every
// positive is revealed (p = 1), by direct best-response evaluation.
struct CertainOutcome {
  std::size_t recourse = 0;
  std::size_t manipulate = 0;
};

inline CertainOutcome certain_outcome(const GameInstance& g, const std::vector<int>& chosen) {
  const std::vector<bool> mask = detail::mask_of(chosen, g.num_candidates());
  CertainOutcome out;
  detail::realized_delta(g, mask, mask, std::vector<bool>(g.num_positives(), true),
                         &out.recourse, &out.manipulate);
  return out;
}

struct Selection {
  std::vector<int> subset;  // sorted candidate indices
  double value = 0.0;
};

inline constexpr double kImprovementSlack = 1e-12;
inline constexpr std::size_t kMaxBruteForceCandidates = 20;

// Exhaustive search over subsets with |S| <= k (or == k). Ties within
// kImprovementSlack go to the lexicographically smallest index set.
inline Selection brute_force_select(const GameInstance& g, std::size_t k,
                                    Objective objective = Objective::kUtility,
                                    Cardinality cardinality = Cardinality::kAtMost) {
  const std::size_t m = g.num_candidates();
  if (m > kMaxBruteForceCandidates) {
    throw Error(ErrorKind::kUnsupported, "brute force refuses more than 20 candidates");
  }
  k = std::min(k, m);
  std::optional<Selection> best;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > k || (cardinality == Cardinality::kExactly && size != k)) continue;
    std::vector<int> subset;
    for (std::size_t j = 0; j < m; ++j)
      if ((mask >> j) & 1u) subset.push_back(static_cast<int>(j));
    const double v = objective_value(g, subset, objective);
    if (!best || v > best->value + kImprovementSlack ||
        (v >= best->value - kImprovementSlack && subset < best->subset)) {
      best = Selection{std::move(subset), v};
    }
  }
  return *best;
}

// Greedy insertion order: repeatedly adds the best-gain candidate (ties to
// the lowest index). Under kAtMost it stops early once no candidate
// strictly improves. Greedy for k is the length-k prefix of this order.
inline std::vector<int> greedy_order(const GameInstance& g, std::size_t k,
                                     Objective objective = Objective::kUtility,
                                     Cardinality cardinality = Cardinality::kExactly) {
  const std::size_t m = g.num_candidates();
  if (k > m) throw Error(ErrorKind::kPrecondition, "k exceeds the number of candidates");
  ChoiceState state(g, objective);
  std::vector<int> order;
  for (std::size_t step = 0; step < k; ++step) {
    std::optional<std::size_t> best;
    double best_gain = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (state.contains(j)) continue;
      const double gain = state.toggle_gain(j);
      if (!best || gain > best_gain + kImprovementSlack) {
        best = j;
        best_gain = gain;
      }
    }
    if (cardinality == Cardinality::kAtMost && best_gain <= kImprovementSlack) break;
    state.toggle(*best);
    order.push_back(static_cast<int>(*best));
  }
  return order;
}

inline Selection greedy_select(const GameInstance& g, std::size_t k,
                               Objective objective = Objective::kUtility,
                               Cardinality cardinality = Cardinality::kExactly) {
  std::vector<int> subset = greedy_order(g, k, objective, cardinality);
  std::sort(subset.begin(), subset.end());
  const double value = objective_value(g, subset, objective);
  return {std::move(subset), value};
}

// Hill climbing from the greedy solution over add / drop / swap moves
// (add and drop only under kAtMost). Moves are scanned in index order and
// the first strictly improving one is taken; at most max_iters moves.
inline Selection local_search_select(const GameInstance& g, std::size_t k,
                                     std::size_t max_iters,
                                     Objective objective = Objective::kUtility,
                                     Cardinality cardinality = Cardinality::kExactly) {
  const std::size_t m = g.num_candidates();
  if (k > m) throw Error(ErrorKind::kPrecondition, "k exceeds the number of candidates");
  ChoiceState state(g, objective);
  state.set(greedy_select(g, k, objective, cardinality).subset);
  const bool resizable = cardinality == Cardinality::kAtMost;
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    bool moved = false;
    if (resizable) {
      for (std::size_t j = 0; j < m && !moved; ++j) {
        const bool allowed = state.contains(j) || state.size() < k;
        if (allowed && state.toggle_gain(j) > kImprovementSlack) {
          state.toggle(j);
          moved = true;
        }
      }
    }
    for (std::size_t out = 0; out < m && !moved; ++out) {
      if (!state.contains(out)) continue;
      for (std::size_t in = 0; in < m && !moved; ++in) {
        if (state.contains(in)) continue;
        if (state.swap_gain(out, in) > kImprovementSlack) {
          state.toggle(out);
          state.toggle(in);
          moved = true;
        }
      }
    }
    if (!moved) break;
  }
  return {state.subset(), state.value()};
}

// k candidates uniformly at random (the non-strategic baseline).
inline Selection random_k_select(const GameInstance& g, std::size_t k, std::uint64_t seed,
                                 Objective objective = Objective::kUtility) {
  const std::size_t m = g.num_candidates();
  if (k > m) throw Error(ErrorKind::kPrecondition, "k exceeds the number of candidates");
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  Rng rng(seed);
  // Partial Fisher-Yates with our own uniform draws for portability.
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(m - i));
    std::swap(pool[i], pool[std::min(j, m - 1)]);
  }
  std::vector<int> subset(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(subset.begin(), subset.end());
  return {subset, objective_value(g, subset, objective)};
}

inline constexpr std::size_t kMaxIlpCandidates = 25;

// Number of agents performing recourse at p = 1 under the integer program's
// constraints: own action released, cheaper than the cap, and no released
// candidate or positive strictly cheaper to imitate.
inline std::size_t recourse_count_p1(const GameInstance& g, const std::vector<int>& chosen) {
  const std::vector<bool> mask = detail::mask_of(chosen, g.num_candidates());
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.num_agents(); ++i) {
    const int own = g.own_candidate[i];
    if (own == kNoCandidate || !mask[own]) continue;
    const double rc = g.recourse_cost(i, own);
    if (!(rc < kActionCostCap)) continue;
    bool ok = true;
    for (std::size_t j = 0; j < g.num_candidates() && ok; ++j)
      ok = !(mask[j] && g.manipulation_cost(i, j) < rc);
    for (std::size_t l = 0; l < g.num_positives() && ok; ++l)
      ok = !(g.positive_manipulation_cost(i, l) < rc);
    count += ok;
  }
  return count;
}

namespace detail {

// Depth-first branch and bound over the release variables a_j (include
// branch first, so the first optimum found is the lexicographically
// smallest). The per-agent recourse variables are implied by a.
class RecourseCountBranchAndBound {
 public:
  RecourseCountBranchAndBound(const GameInstance& g, std::size_t k) : g_(g), k_(k) {
    const std::size_t n = g.num_agents();
    const std::size_t m = g.num_candidates();
    eligible_.assign(n, false);
    killers_.assign(m, {});
    owners_.assign(m, {});
    for (std::size_t i = 0; i < n; ++i) {
      const int own = g.own_candidate[i];
      if (own == kNoCandidate) continue;
      const double rc = g.recourse_cost(i, own);
      bool ok = rc < kActionCostCap;
      for (std::size_t l = 0; l < g.num_positives() && ok; ++l)
        ok = !(g.positive_manipulation_cost(i, l) < rc);
      eligible_[i] = ok;
      if (!ok) continue;
      owners_[own].push_back(i);
      for (std::size_t j = 0; j < m; ++j)
        if (g.manipulation_cost(i, j) < rc) killers_[j].push_back(i);
    }
    killed_.assign(n, 0);
    chosen_.assign(m, false);
  }

  Selection solve(double incumbent_value) {
    best_value_ = incumbent_value;
    search(0, 0);
    if (!best_) throw Error(ErrorKind::kPrecondition, "no feasible release set of size k");
    return {*best_, best_value_};
  }

 private:
  double bound(std::size_t next, std::size_t picked) const {
    double secured = 0.0;
    std::vector<double> open_gains;
    for (std::size_t j = 0; j < g_.num_candidates(); ++j) {
      std::size_t live = 0;
      for (std::size_t i : owners_[j]) live += killed_[i] == 0;
      if (j < next) {
        if (chosen_[j]) secured += static_cast<double>(live);
      } else {
        open_gains.push_back(static_cast<double>(live));
      }
    }
    const std::size_t slots = k_ - picked;
    std::sort(open_gains.begin(), open_gains.end(), std::greater<>());
    for (std::size_t s = 0; s < slots && s < open_gains.size(); ++s) secured += open_gains[s];
    return secured;
  }

  void search(std::size_t next, std::size_t picked) {
    const std::size_t m = g_.num_candidates();
    if (picked > k_ || picked + (m - next) < k_) return;
    if (bound(next, picked) <= best_value_) return;
    if (next == m) {
      double value = 0.0;
      for (std::size_t j = 0; j < m; ++j)
        if (chosen_[j])
          for (std::size_t i : owners_[j]) value += killed_[i] == 0;
      if (value > best_value_) {
        best_value_ = value;
        std::vector<int> subset;
        for (std::size_t j = 0; j < m; ++j)
          if (chosen_[j]) subset.push_back(static_cast<int>(j));
        best_ = std::move(subset);
      }
      return;
    }
    chosen_[next] = true;
    for (std::size_t i : killers_[next]) ++killed_[i];
    search(next + 1, picked + 1);
    for (std::size_t i : killers_[next]) --killed_[i];
    chosen_[next] = false;
    search(next + 1, picked);
  }

  const GameInstance& g_;
  std::size_t k_;
  std::vector<bool> eligible_;
  std::vector<std::vector<std::size_t>> killers_;
  std::vector<std::vector<std::size_t>> owners_;
  std::vector<int> killed_;
  std::vector<bool> chosen_;
  double best_value_ = 0.0;
  std::optional<std::vector<int>> best_;
};

}  // namespace detail

// Exact maximizer of the recourse count at p = 1 over release sets of size
// exactly k.
inline Selection exact_ilp_p1(const GameInstance& g, std::size_t k) {
  if (g.p != 1.0) throw Error(ErrorKind::kUnsupported, "exact_ilp_p1 requires p = 1");
  if (g.num_candidates() > kMaxIlpCandidates) {
    throw Error(ErrorKind::kPrecondition, "exact_ilp_p1 supports at most 25 candidates");
  }
  if (k > g.num_candidates()) throw Error(ErrorKind::kPrecondition, "k exceeds candidates");
  detail::RecourseCountBranchAndBound bnb(g, k);
  // Start just below zero so the search always records a first feasible set.
  Selection s = bnb.solve(-0.5);
  s.value = static_cast<double>(recourse_count_p1(g, s.subset));
  return s;
}

// Minimum k-Union instance: universe elements 0..n-1, sets over them. Set j
// is paired with element j, so the pairing requires #sets <= n and
// j ∈ S_j.
struct KUnionInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<int>> sets;
};

inline std::size_t union_size(const KUnionInstance& mku, const std::vector<int>& chosen) {
  std::set<int> u;
  for (int j : chosen) u.insert(mku.sets.at(j).begin(), mku.sets.at(j).end());
  return u.size();
}

// Agents are universe elements, candidates are sets. Recourse to the
// paired set is free and any other costs 1; imitating a set costs 1/2 if
// the agent's element belongs to it, 1 otherwise. A released set therefore
// triggers exactly its paired agent's recourse and the manipulation of its
// other members.
inline GameInstance mku_to_instance(const KUnionInstance& mku, std::size_t k) {
  const std::size_t n = mku.universe_size;
  const std::size_t m = mku.sets.size();
  if (n == 0 || m == 0) throw Error(ErrorKind::kPrecondition, "empty universe or set family");
  if (m > n) throw Error(ErrorKind::kPrecondition, "need at most one set per universe element");
  if (k > m) throw Error(ErrorKind::kPrecondition, "k exceeds the number of sets");
  std::vector<std::vector<bool>> member(m, std::vector<bool>(n, false));
  for (std::size_t j = 0; j < m; ++j) {
    for (int s : mku.sets[j]) {
      if (s < 0 || static_cast<std::size_t>(s) >= n)
        throw Error(ErrorKind::kPrecondition, "set element outside the universe");
      member[j][s] = true;
    }
    if (!member[j][j]) {
      throw Error(ErrorKind::kPrecondition,
                  "set " + std::to_string(j) + " must contain its paired element");
    }
  }
  GameInstance g;
  g.agent_ids.resize(n);
  std::iota(g.agent_ids.begin(), g.agent_ids.end(), 0);
  g.own_candidate.assign(n, kNoCandidate);
  g.recourse_cost = Matrix(n, m, 1.0);
  g.manipulation_cost = Matrix(n, m, 1.0);
  g.positive_manipulation_cost = Matrix(n, 0);
  g.q_original.assign(n, 0.0);
  g.q_recourse.assign(n, 1.0);
  g.p = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < m) {
      g.own_candidate[i] = static_cast<int>(i);
      g.recourse_cost(i, i) = 0.0;
    }
    for (std::size_t j = 0; j < m; ++j)
      if (member[j][i]) g.manipulation_cost(i, j) = 0.5;
  }
  g.validate();
  return g;
}

inline Selection brute_force_min_k_union(const KUnionInstance& mku, std::size_t k) {
  const std::size_t m = mku.sets.size();
  std::optional<Selection> best;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<int> subset;
    for (std::size_t j = 0; j < m; ++j)
      if ((mask >> j) & 1u) subset.push_back(static_cast<int>(j));
    const auto v = static_cast<double>(union_size(mku, subset));
    if (!best || v < best->value || (v == best->value && subset < best->subset))
      best = Selection{std::move(subset), v};
  }
  return *best;
}

// Plain-text instance format:
//   game_instance 1
//   agents <n> candidates <m> positives <P>
//   p <p>
//   ids <n ints>
//   own <n ints, -1 for none>
//   q_original <n reals>
//   q_recourse <n reals>
//   recourse_cost      followed by n rows of m reals
//   manipulation_cost  followed by n rows of m reals
//   positive_manipulation_cost  followed by n rows of P reals
inline void dump_instance(std::ostream& out, const GameInstance& g) {
  out << std::setprecision(17);
  out << "game_instance 1\n";
  out << "agents " << g.num_agents() << " candidates " << g.num_candidates() << " positives "
      << g.num_positives() << "\n";
  out << "p " << g.p << "\n";
  auto line = [&](const char* key, const auto& v) {
    out << key;
    for (const auto& x : v) out << ' ' << x;
    out << '\n';
  };
  line("ids", g.agent_ids);
  line("own", g.own_candidate);
  line("q_original", g.q_original);
  line("q_recourse", g.q_recourse);
  auto matrix = [&](const char* key, const Matrix& m) {
    out << key << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
      out << '\n';
    }
  };
  matrix("recourse_cost", g.recourse_cost);
  matrix("manipulation_cost", g.manipulation_cost);
  matrix("positive_manipulation_cost", g.positive_manipulation_cost);
}

inline GameInstance load_instance(std::istream& in) {
  auto expect = [&](const std::string& word) {
    std::string got;
    if (!(in >> got) || got != word)
      throw Error(ErrorKind::kParse, "instance: expected '" + word + "', got '" + got + "'");
  };
  auto read = [&](auto& value, const char* what) {
    if (!(in >> value)) throw Error(ErrorKind::kParse, std::string("instance: bad ") + what);
  };
  expect("game_instance");
  int version = 0;
  read(version, "version");
  if (version != 1) throw Error(ErrorKind::kParse, "instance: unknown version");
  std::size_t n = 0, m = 0, P = 0;
  expect("agents");
  read(n, "agent count");
  expect("candidates");
  read(m, "candidate count");
  expect("positives");
  read(P, "positive count");
  GameInstance g;
  expect("p");
  read(g.p, "p");
  auto vec = [&](const char* key, auto& v, std::size_t len) {
    expect(key);
    v.resize(len);
    for (auto& x : v) read(x, key);
  };
  vec("ids", g.agent_ids, n);
  vec("own", g.own_candidate, n);
  vec("q_original", g.q_original, n);
  vec("q_recourse", g.q_recourse, n);
  auto matrix = [&](const char* key, Matrix& mat, std::size_t cols) {
    expect(key);
    mat = Matrix(n, cols);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < cols; ++c) read(mat(r, c), key);
  };
  matrix("recourse_cost", g.recourse_cost, m);
  matrix("manipulation_cost", g.manipulation_cost, m);
  matrix("positive_manipulation_cost", g.positive_manipulation_cost, P);
  g.validate();
  return g;
}

}  // namespace recourse
