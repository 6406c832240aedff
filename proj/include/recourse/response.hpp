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
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recourse/costs.hpp"
#include "recourse/error.hpp"
#include "recourse/model.hpp"
#include "recourse/vec.hpp"

namespace recourse {

inline constexpr double kDefaultBoundaryOffset = 1e-6;

// Utility cap: any action costing 1 or more is worse than doing nothing.
inline constexpr double kActionCostCap = 1.0;

using FeatureSet = std::vector<Vector>;

enum class ActionKind { kRecourse, kManipulate, kNothing };

inline const char* to_string(ActionKind k) {
  switch (k) {
    case ActionKind::kRecourse: return "recourse";
    case ActionKind::kManipulate: return "manipulate";
    case ActionKind::kNothing: return "nothing";
  }
  return "?";
}

// Gated follows the provision-dependent best response (recourse only with
// an assigned action); open lets any revealed point serve as a recourse
// destination for every agent.
enum class ResponseMode { kGated, kOpen };

struct Action {
  ActionKind kind = ActionKind::kNothing;
  std::optional<Vector> target;
  double paid_cost = 0.0;
  Vector effective_true_feature;
};

// agent id -> provided with a recourse action
using ProvisionFlags = std::map<int, bool>;

// Cheapest point of the halfspace {score(x') >= threshold + eps} under the
// w_R-weighted l2 norm. Dimensions with zero recourse weight are free, so
// when the classifier uses one the whole move happens there at zero cost.
inline Vector optimal_recourse(std::span<const double> x,
                               const LinearClassifier& clf, const CostModel& cm,
                               double eps = kDefaultBoundaryOffset) {
  require_same_dim(x.size(), clf.dim(), "optimal_recourse");
  require_same_dim(x.size(), cm.dim(), "optimal_recourse");
  if (!(eps > 0.0)) throw Error(ErrorKind::kPrecondition, "eps must be > 0");
  if (clf.predict(x) == 1) {
    throw Error(ErrorKind::kPrecondition, "optimal_recourse on a positive agent");
  }
  const Vector& w = clf.weights();
  const Vector& wr = cm.recourse_weights();
  const std::size_t d = x.size();

  Vector direction(d, 0.0);
  bool has_free = false;
  for (std::size_t k = 0; k < d; ++k) has_free |= (wr[k] == 0.0 && w[k] != 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    if (has_free) {
      direction[k] = wr[k] == 0.0 ? w[k] : 0.0;
    } else if (wr[k] > 0.0) {
      direction[k] = w[k] / (wr[k] * wr[k]);
    }
  }
  const double gain = dot(w, direction);
  if (!(gain > 0.0)) {
    throw Error(ErrorKind::kInfeasibleRecourse,
                "classifier has no direction that raises the score");
  }
  const double needed = clf.score_threshold() + eps - clf.score(x);
  Vector target(x.begin(), x.end());
  double step = needed / gain;
  // Guard against the rounded score landing a hair under the threshold.
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (std::size_t k = 0; k < d; ++k) target[k] = x[k] + step * direction[k];
    if (clf.predict(target) == 1) return target;
    step = step * (1.0 + 1e-12) + std::numeric_limits<double>::min();
  }
  throw Error(ErrorKind::kInfeasibleRecourse, "projection did not reach the positive side");
}

struct TargetChoice {
  Vector target;
  double cost = 0.0;
};

namespace detail {

template <class CostFn>
std::optional<TargetChoice> cheapest(std::span<const double> x, const FeatureSet& Z,
                                     CostFn cost) {
  std::optional<TargetChoice> best;
  for (const Vector& z : Z) {
    const double c = cost(x, z);
    if (!best || c < best->cost ||
        (c == best->cost && std::lexicographical_compare(z.begin(), z.end(),
                                                         best->target.begin(),
                                                         best->target.end()))) {
      best = TargetChoice{z, c};
    }
  }
  return best;
}

}  // namespace detail

// argmin of c_M over Z; equal costs go to the lexicographically smaller point.
inline std::optional<TargetChoice> optimal_manipulation(std::span<const double> x,
                                                        const FeatureSet& Z,
                                                        const CostModel& cm) {
  return detail::cheapest(x, Z, [&](auto a, auto b) { return cm.manipulation_cost(a, b); });
}

// argmin of the (subsidized) c_R over Z, same tie rule.
inline std::optional<TargetChoice> cheapest_revealed_recourse(std::span<const double> x,
                                                              const FeatureSet& Z,
                                                              const CostModel& cm) {
  return detail::cheapest(x, Z, [&](auto a, auto b) { return cm.recourse_cost(a, b); });
}

// The three-way best response on scalar costs. An absent option costs +inf.
// Recourse wins ties against manipulation; both must cost strictly under 1.
inline ActionKind decide(std::optional<double> recourse, std::optional<double> manipulation) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double rc = recourse.value_or(inf);
  const double mc = manipulation.value_or(inf);
  if (rc < kActionCostCap && rc <= mc) return ActionKind::kRecourse;
  if (mc < std::min(kActionCostCap, rc)) return ActionKind::kManipulate;
  return ActionKind::kNothing;
}

namespace detail {

inline Action make_action(ActionKind kind, std::span<const double> x,
                          const std::optional<TargetChoice>& rec,
                          const std::optional<TargetChoice>& man) {
  Action a;
  a.kind = kind;
  a.effective_true_feature.assign(x.begin(), x.end());
  if (kind == ActionKind::kRecourse) {
    a.target = rec->target;
    a.paid_cost = rec->cost;
    a.effective_true_feature = rec->target;
  } else if (kind == ActionKind::kManipulate) {
    a.target = man->target;
    a.paid_cost = man->cost;
  }
  return a;
}

}  // namespace detail

// Best response of a negatively classified agent. A provided agent always
// knows its own assigned recourse action whether or not it was revealed;
// Z only supplies imitation targets.
inline Action final_action(std::span<const double> x, bool provided,
                           const std::optional<Vector>& assigned_recourse,
                           const FeatureSet& Z, const CostModel& cm,
                           const LinearClassifier& clf) {
  if (clf.predict(x) == 1) {
    throw Error(ErrorKind::kPrecondition, "final_action on a positive agent");
  }
  std::optional<TargetChoice> rec;
  if (provided) {
    if (!assigned_recourse) {
      throw Error(ErrorKind::kPrecondition, "provided agent without an assigned action");
    }
    rec = TargetChoice{*assigned_recourse, cm.recourse_cost(x, *assigned_recourse)};
  }
  const auto man = optimal_manipulation(x, Z, cm);
  const ActionKind kind = decide(rec ? std::optional(rec->cost) : std::nullopt,
                                 man ? std::optional(man->cost) : std::nullopt);
  return detail::make_action(kind, x, rec, man);
}

// Open semantics: recourse and manipulation both pick their cheapest point in Z.
inline Action open_action(std::span<const double> x, const FeatureSet& Z,
                          const CostModel& cm) {
  const auto rec = cheapest_revealed_recourse(x, Z, cm);
  const auto man = optimal_manipulation(x, Z, cm);
  const ActionKind kind = decide(rec ? std::optional(rec->cost) : std::nullopt,
                                 man ? std::optional(man->cost) : std::nullopt);
  return detail::make_action(kind, x, rec, man);
}

namespace detail {

inline void require_negatives(const FeatureSet& negatives) {
  if (negatives.empty()) {
    throw Error(ErrorKind::kUndefinedMetric, "rate over an empty negative set");
  }
}

inline std::size_t count_open(const FeatureSet& Z, const FeatureSet& negatives,
                              const CostModel& cm, ActionKind wanted) {
  std::size_t hits = 0;
  for (const Vector& x : negatives) hits += open_action(x, Z, cm).kind == wanted;
  return hits;
}

}  // namespace detail

// Fraction of negatives whose cheapest revealed recourse beats both the cap
// and their cheapest revealed manipulation.
inline double recourse_rate(const FeatureSet& Z, const FeatureSet& negatives,
                            const CostModel& cm) {
  detail::require_negatives(negatives);
  return static_cast<double>(detail::count_open(Z, negatives, cm, ActionKind::kRecourse)) /
         static_cast<double>(negatives.size());
}

inline double manipulation_rate(const FeatureSet& Z, const FeatureSet& negatives,
                                const CostModel& cm) {
  detail::require_negatives(negatives);
  return static_cast<double>(detail::count_open(Z, negatives, cm, ActionKind::kManipulate)) /
         static_cast<double>(negatives.size());
}

// Threshold form of the recourse indicator: with m = min(1, min c_M) and
// r = min unsubsidized c_R, the agent does recourse iff alpha >= 1 - m / r
// (and the subsidized cost stays under the cap). r = 0 always qualifies.
inline std::size_t recourse_count_by_threshold(const FeatureSet& Z,
                                               const FeatureSet& negatives,
                                               const CostModel& cm) {
  if (Z.empty()) return 0;
  const CostModel base = cm.with_subsidy(0.0);
  std::size_t hits = 0;
  for (const Vector& x : negatives) {
    const double r = cheapest_revealed_recourse(x, Z, base)->cost;
    const double m = std::min(kActionCostCap, optimal_manipulation(x, Z, base)->cost);
    if (r == 0.0) {
      ++hits;
      continue;
    }
    const double alpha_star = 1.0 - m / r;
    hits += cm.subsidy() >= alpha_star && (1.0 - cm.subsidy()) * r < kActionCostCap;
  }
  return hits;
}

}  // namespace recourse
