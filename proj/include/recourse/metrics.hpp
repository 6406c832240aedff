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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recourse/costs.hpp"
#include "recourse/error.hpp"
#include "recourse/model.hpp"
#include "recourse/response.hpp"
#include "recourse/reveal.hpp"
#include "recourse/rng.hpp"

namespace recourse {

// One agent after the round. Initially positive agents always do nothing.
struct AgentOutcome {
  int id = 0;
  int label = 0;
  std::string group;
  Vector features;
  bool initially_positive = false;
  bool provided = false;
  Action action;
};

struct GameOutcome {
  std::vector<AgentOutcome> agents;  // ascending id
  RevealState reveal;
  std::vector<int> chosen_ids;       // agents whose recourse was released
};

// Sum over agents of the extra recourse cost: the cheapest revealed
// target versus the unconstrained optimum, both under the current subsidy.
// Absent when Z is empty. Terms are clamped at 0 because a revealed positive
// can sit inside the boundary offset.
inline std::optional<double> social_cost(const FeatureSet& Z, const FeatureSet& negatives,
                                         const FeatureSet& optimal_targets,
                                         const CostModel& cm) {
  if (Z.empty()) return std::nullopt;
  if (optimal_targets.size() != negatives.size()) {
    throw Error(ErrorKind::kPrecondition, "one optimal target per negative agent");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    const double revealed = cheapest_revealed_recourse(negatives[i], Z, cm)->cost;
    const double optimum = cm.recourse_cost(negatives[i], optimal_targets[i]);
    total += std::max(0.0, revealed - optimum);
  }
  return total;
}

inline std::optional<double> social_cost(const FeatureSet& Z, const FeatureSet& negatives,
                                         const CostModel& cm, const LinearClassifier& clf,
                                         double eps = kDefaultBoundaryOffset) {
  FeatureSet targets;
  targets.reserve(negatives.size());
  for (const Vector& x : negatives) targets.push_back(optimal_recourse(x, clf, cm, eps));
  return social_cost(Z, negatives, targets, cm);
}

struct GroupReport {
  std::string group;
  std::size_t negatives = 0;
  std::optional<double> recourse_rate;
  std::optional<double> manipulation_rate;
  std::optional<double> social_cost;
};

enum class DisparityKind { kCost, kRecourse };

inline double disparity(const GroupReport& g0, const GroupReport& g1, DisparityKind which) {
  if (g0.negatives == 0 || g1.negatives == 0) {
    throw Error(ErrorKind::kUndefinedMetric, "disparity needs negatives in both groups");
  }
  const auto& a = which == DisparityKind::kCost ? g0.social_cost : g0.recourse_rate;
  const auto& b = which == DisparityKind::kCost ? g1.social_cost : g1.recourse_rate;
  if (!a || !b) throw Error(ErrorKind::kUndefinedMetric, "disparity of an absent metric");
  return std::abs(*b - *a);
}

struct MetricsReport {
  std::uint64_t run_seed = 0;
  double alpha = 0.0;
  double p = 0.0;
  double provision_fraction = 0.0;
  std::string mode;
  std::optional<double> recourse_rate;
  std::optional<double> manipulation_rate;
  std::optional<double> social_cost;
  std::optional<double> utility_expected;
  std::optional<double> utility_realized;
  std::optional<double> diff_rec;
  std::optional<double> diff_cost;
  std::vector<GroupReport> groups;
};

// TP - FP over everyone classified positive after the round. Manipulators
// keep their own label; recourse agents get a fresh label drawn from
// q(target), one uniform per recourse agent in id order.
inline double realized_utility(const GameOutcome& outcome, const LinearClassifier& clf,
                               std::uint64_t seed) {
  Rng rng(seed);
  double u = 0.0;
  for (const AgentOutcome& a : outcome.agents) {
    if (a.initially_positive) {
      u += a.label == 1 ? 1.0 : -1.0;
      continue;
    }
    switch (a.action.kind) {
      case ActionKind::kRecourse: {
        const double q = clf.qualification(*a.action.target);
        u += uniform01(rng) < q ? 1.0 : -1.0;
        break;
      }
      case ActionKind::kManipulate:
        u += a.label == 1 ? 1.0 : -1.0;
        break;
      case ActionKind::kNothing:
        break;
    }
  }
  return u;
}

struct MetricSummary {
  std::optional<double> mean;
  std::optional<double> half_width;  // 1.96 * stderr
  std::size_t count = 0;
};

inline MetricSummary summarize(const std::vector<double>& values) {
  MetricSummary s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  const double n = static_cast<double>(values.size());
  const double mean = sum / n;
  s.mean = mean;
  if (values.size() >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    s.half_width = 1.96 * std::sqrt(ss / (n - 1.0) / n);
  }
  return s;
}

using MetricField = std::optional<double> MetricsReport::*;

struct NamedMetric {
  const char* name;
  MetricField field;
};

inline constexpr NamedMetric kReportedMetrics[] = {
    {"recourse_rate", &MetricsReport::recourse_rate},
    {"manipulation_rate", &MetricsReport::manipulation_rate},
    {"social_cost", &MetricsReport::social_cost},
    {"utility_expected", &MetricsReport::utility_expected},
    {"utility_realized", &MetricsReport::utility_realized},
    {"diff_rec", &MetricsReport::diff_rec},
    {"diff_cost", &MetricsReport::diff_cost},
};

struct AggregateReport {
  double alpha = 0.0;
  double p = 0.0;
  double provision_fraction = 0.0;
  std::string mode;
  std::size_t runs = 0;
  std::vector<std::pair<std::string, MetricSummary>> metrics;

  const MetricSummary& at(const std::string& name) const {
    for (const auto& [n, s] : metrics)
      if (n == name) return s;
    throw Error(ErrorKind::kPrecondition, "no metric named " + name);
  }
};

// Mean and normal-approximation 95% CI per metric, skipping absent values.
inline AggregateReport aggregate(const std::vector<MetricsReport>& reports) {
  if (reports.size() < 2) {
    throw Error(ErrorKind::kPrecondition, "aggregate needs at least 2 reports");
  }
  AggregateReport out;
  out.alpha = reports.front().alpha;
  out.p = reports.front().p;
  out.provision_fraction = reports.front().provision_fraction;
  out.mode = reports.front().mode;
  out.runs = reports.size();
  for (const NamedMetric& m : kReportedMetrics) {
    std::vector<double> values;
    for (const MetricsReport& r : reports)
      if (r.*(m.field)) values.push_back(*(r.*(m.field)));
    out.metrics.emplace_back(m.name, summarize(values));
  }
  return out;
}

// CSV formatting: %.10g, absent values as NA.
inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v == 0.0 ? 0.0 : v);
  return buf;
}

inline std::string format_optional(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string("NA");
}

inline constexpr const char* kResultsCsvHeader =
    "run_seed,alpha,p,provision_fraction,mode,recourse_rate,manipulation_rate,"
    "social_cost,utility_expected,utility_realized,group,diff_rec,diff_cost";

inline std::string csv_row(const MetricsReport& r, const std::string& group = "all") {
  std::string row = std::to_string(r.run_seed);
  for (double v : {r.alpha, r.p, r.provision_fraction}) row += "," + format_real(v);
  row += "," + r.mode;
  for (const auto* v : {&r.recourse_rate, &r.manipulation_rate, &r.social_cost,
                        &r.utility_expected, &r.utility_realized})
    row += "," + format_optional(*v);
  row += "," + group;
  row += "," + format_optional(r.diff_rec);
  row += "," + format_optional(r.diff_cost);
  return row;
}

// Aggregate rows reuse the results schema with run_seed = "mean".
inline std::string csv_row(const AggregateReport& a) {
  std::string row = "mean";
  for (double v : {a.alpha, a.p, a.provision_fraction}) row += "," + format_real(v);
  row += "," + a.mode;
  for (const char* name : {"recourse_rate", "manipulation_rate", "social_cost",
                           "utility_expected", "utility_realized"})
    row += "," + format_optional(a.at(name).mean);
  row += ",all";
  row += "," + format_optional(a.at("diff_rec").mean);
  row += "," + format_optional(a.at("diff_cost").mean);
  return row;
}

inline constexpr const char* kSummaryCsvHeader =
    "alpha,p,provision_fraction,mode,metric,mean,ci_low,ci_high,runs";

inline std::vector<std::string> summary_rows(const AggregateReport& a) {
  std::vector<std::string> rows;
  for (const auto& [name, s] : a.metrics) {
    std::string row;
    row += format_real(a.alpha) + "," + format_real(a.p) + "," +
           format_real(a.provision_fraction) + "," + a.mode + "," + name + ",";
    row += format_optional(s.mean) + ",";
    if (s.mean && s.half_width) {
      row += format_real(*s.mean - *s.half_width) + "," + format_real(*s.mean + *s.half_width);
    } else {
      row += "NA,NA";
    }
    row += "," + std::to_string(s.count);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace recourse
