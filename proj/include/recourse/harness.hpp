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
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "recourse/costs.hpp"
#include "recourse/error.hpp"
#include "recourse/metrics.hpp"
#include "recourse/model.hpp"
#include "recourse/optimizer.hpp"
#include "recourse/population.hpp"
#include "recourse/response.hpp"
#include "recourse/reveal.hpp"
#include "recourse/rng.hpp"
#include "recourse/theory.hpp"

namespace recourse {

// ---------------------------------------------------------------------------
// Synthetic data.

struct SyntheticSpec {
  std::size_t n = 2000;
  std::size_t d = 2;
  double group_shift = 1.0;
  std::uint64_t seed = 0;
};

// Two label clusters at -/+ 1 per coordinate with unit noise. Members of the
// disadvantaged group ("g1") have every coordinate shifted down by
// group_shift, which pushes that group's negatives away from the boundary.
// Features are standardized like a loaded CSV.
inline Population synth_population(const SyntheticSpec& spec) {
  if (spec.n < 4) throw Error(ErrorKind::kConfig, "synthetic.n must be >= 4");
  if (spec.d < 1) throw Error(ErrorKind::kConfig, "synthetic.d must be >= 1");
  if (!std::isfinite(spec.group_shift))
    throw Error(ErrorKind::kConfig, "synthetic.group_shift must be finite");
  Rng rng(spec.seed);
  std::vector<Agent> agents(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    Agent& a = agents[i];
    a.id = static_cast<int>(i);
    a.label = uniform01(rng) < 0.5 ? 1 : 0;
    const bool disadvantaged = uniform01(rng) < 0.5;
    a.group = disadvantaged ? "g1" : "g0";
    a.features.resize(spec.d);
    for (double& x : a.features)
      x = (a.label == 1 ? 1.0 : -1.0) - (disadvantaged ? spec.group_shift : 0.0) + normal01(rng);
  }
  return standardized(std::move(agents), {"g0", "g1"});
}

inline void write_population_csv(std::ostream& out, const Population& pop) {
  for (std::size_t k = 0; k < pop.dim(); ++k) out << 'f' << k << ',';
  out << "label,group\n";
  char buf[40];
  for (const Agent& a : pop.agents()) {
    for (double x : a.features) {
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out << buf << ',';
    }
    out << a.label << ',' << a.group << '\n';
  }
}

// ---------------------------------------------------------------------------
// Configuration.

enum class OptimizerKind { kBruteForce, kGreedy, kLocalSearch, kIlpP1, kRandomK };

inline const char* to_string(OptimizerKind o) {
  switch (o) {
    case OptimizerKind::kBruteForce: return "bruteforce";
    case OptimizerKind::kGreedy: return "greedy";
    case OptimizerKind::kLocalSearch: return "localsearch";
    case OptimizerKind::kIlpP1: return "ilp_p1";
    case OptimizerKind::kRandomK: return "random_k";
  }
  return "?";
}

inline const char* to_string(ResponseMode m) {
  return m == ResponseMode::kGated ? "gated" : "open";
}

struct ExperimentConfig {
  // Dataset: a CSV path with its schema, or synthetic data when path is empty.
  std::string dataset_path;
  CsvSchema schema;
  SyntheticSpec synthetic;

  double p = kDefaultRevealProbability;
  std::vector<double> subsidies{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  std::vector<double> provision_fractions{0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                          0.6, 0.7, 0.8, 0.9, 1.0};
  std::size_t runs = 100;
  OptimizerKind optimizer = OptimizerKind::kGreedy;
  ResponseMode response_mode = ResponseMode::kOpen;
  std::uint64_t base_seed = 0;
  std::string output_dir = "out";
  std::size_t sample_size = 400;  // agents resampled per run; 0 keeps everyone
  std::size_t local_search_iters = 200;
  TrainConfig train;

  void validate() const {
    auto fail = [](const std::string& field, const std::string& why) {
      throw Error(ErrorKind::kConfig, "field '" + field + "': " + why);
    };
    if (!(p >= 0.0 && p <= 1.0)) fail("p", "must lie in [0, 1]");
    if (subsidies.empty()) fail("subsidies", "must not be empty");
    for (double a : subsidies)
      if (!(a >= 0.0 && a <= 1.0)) fail("subsidies", "values must lie in [0, 1]");
    if (provision_fractions.empty()) fail("provision_fractions", "must not be empty");
    for (double f : provision_fractions)
      if (!(f >= 0.0 && f <= 1.0)) fail("provision_fractions", "values must lie in [0, 1]");
    if (runs < 1) fail("runs", "must be >= 1");
    if (optimizer == OptimizerKind::kIlpP1 && p != 1.0) fail("optimizer", "ilp_p1 requires p = 1");
    if (sample_size == 1) fail("sample_size", "must be 0 or >= 2");
    if (!(train.learning_rate > 0.0)) fail("train.learning_rate", "must be > 0");
    if (train.epochs < 1) fail("train.epochs", "must be >= 1");
    if (!(train.l2_penalty >= 0.0)) fail("train.l2_penalty", "must be >= 0");
    if (!dataset_path.empty()) {
      if (schema.features.empty()) fail("dataset.features", "required with a dataset path");
      if (schema.label.empty()) fail("dataset.label", "required with a dataset path");
      if (schema.group.empty()) fail("dataset.group", "required with a dataset path");
    }
  }
};

namespace detail {

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(s);
  while (std::getline(in, cell, ',')) {
    const auto t = trim(cell);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

inline double config_real(const std::string& field, const std::string& v) {
  double x = 0.0;
  if (!parse_double(trim(v), x)) throw Error(ErrorKind::kConfig, "field '" + field + "': not a real number");
  return x;
}

inline std::uint64_t config_uint(const std::string& field, const std::string& v) {
  const auto t = trim(v);
  std::uint64_t x = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw Error(ErrorKind::kConfig, "field '" + field + "': not a non-negative integer");
  return x;
}

inline std::vector<double> config_reals(const std::string& field, const std::string& v) {
  std::vector<double> out;
  for (const std::string& cell : split_list(v)) out.push_back(config_real(field, cell));
  return out;
}

}  // namespace detail

// Flat "key = value" text; '#' starts a comment. Unknown keys are errors.
inline ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig c;
  std::string line;
  std::size_t lineno = 0;
  std::map<std::string, bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto t = detail::trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::kConfig, "line " + std::to_string(lineno) + ": expected key = value");
    const std::string key(detail::trim(t.substr(0, eq)));
    const std::string value(detail::trim(t.substr(eq + 1)));
    if (seen[key]) throw Error(ErrorKind::kConfig, "field '" + key + "': given twice");
    seen[key] = true;
    if (key == "dataset") {
      c.dataset_path = value == "synthetic" ? "" : value;
    } else if (key == "dataset.features") {
      c.schema.features = detail::split_list(value);
    } else if (key == "dataset.label") {
      c.schema.label = value;
    } else if (key == "dataset.group") {
      c.schema.group = value;
    } else if (key == "synthetic.n") {
      c.synthetic.n = detail::config_uint(key, value);
    } else if (key == "synthetic.d") {
      c.synthetic.d = detail::config_uint(key, value);
    } else if (key == "synthetic.group_shift") {
      c.synthetic.group_shift = detail::config_real(key, value);
    } else if (key == "synthetic.seed") {
      c.synthetic.seed = detail::config_uint(key, value);
    } else if (key == "p") {
      c.p = detail::config_real(key, value);
    } else if (key == "subsidies") {
      c.subsidies = detail::config_reals(key, value);
    } else if (key == "provision_fractions") {
      c.provision_fractions = detail::config_reals(key, value);
    } else if (key == "runs") {
      c.runs = detail::config_uint(key, value);
    } else if (key == "optimizer") {
      bool ok = false;
      for (auto o : {OptimizerKind::kBruteForce, OptimizerKind::kGreedy, OptimizerKind::kLocalSearch,
                     OptimizerKind::kIlpP1, OptimizerKind::kRandomK})
        if (value == to_string(o)) {
          c.optimizer = o;
          ok = true;
        }
      if (!ok) throw Error(ErrorKind::kConfig, "field 'optimizer': unknown value '" + value + "'");
    } else if (key == "response_mode") {
      if (value == "gated") {
        c.response_mode = ResponseMode::kGated;
      } else if (value == "open") {
        c.response_mode = ResponseMode::kOpen;
      } else {
        throw Error(ErrorKind::kConfig, "field 'response_mode': expected gated or open");
      }
    } else if (key == "base_seed") {
      c.base_seed = detail::config_uint(key, value);
    } else if (key == "output_dir") {
      c.output_dir = value;
    } else if (key == "sample_size") {
      c.sample_size = detail::config_uint(key, value);
    } else if (key == "local_search_iters") {
      c.local_search_iters = detail::config_uint(key, value);
    } else if (key == "train.learning_rate") {
      c.train.learning_rate = detail::config_real(key, value);
    } else if (key == "train.epochs") {
      c.train.epochs = static_cast<int>(std::min<std::uint64_t>(detail::config_uint(key, value), 1u << 30));
    } else if (key == "train.l2_penalty") {
      c.train.l2_penalty = detail::config_real(key, value);
    } else {
      throw Error(ErrorKind::kConfig, "field '" + key + "': unknown key");
    }
  }
  c.validate();
  return c;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kConfig, "cannot open config '" + path + "'");
  return parse_config(in);
}

inline void write_config(std::ostream& out, const ExperimentConfig& c) {
  auto list = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_real(v[i]);
    return s;
  };
  out << "dataset = " << (c.dataset_path.empty() ? "synthetic" : c.dataset_path) << "\n";
  if (c.dataset_path.empty()) {
    out << "synthetic.n = " << c.synthetic.n << "\n";
    out << "synthetic.d = " << c.synthetic.d << "\n";
    out << "synthetic.group_shift = " << format_real(c.synthetic.group_shift) << "\n";
    out << "synthetic.seed = " << c.synthetic.seed << "\n";
  } else {
    std::string f;
    for (std::size_t i = 0; i < c.schema.features.size(); ++i) f += (i ? "," : "") + c.schema.features[i];
    out << "dataset.features = " << f << "\n";
    out << "dataset.label = " << c.schema.label << "\n";
    out << "dataset.group = " << c.schema.group << "\n";
  }
  out << "p = " << format_real(c.p) << "\n";
  out << "subsidies = " << list(c.subsidies) << "\n";
  out << "provision_fractions = " << list(c.provision_fractions) << "\n";
  out << "runs = " << c.runs << "\n";
  out << "optimizer = " << to_string(c.optimizer) << "\n";
  out << "response_mode = " << to_string(c.response_mode) << "\n";
  out << "base_seed = " << c.base_seed << "\n";
  out << "output_dir = " << c.output_dir << "\n";
  out << "sample_size = " << c.sample_size << "\n";
  out << "local_search_iters = " << c.local_search_iters << "\n";
  out << "train.learning_rate = " << format_real(c.train.learning_rate) << "\n";
  out << "train.epochs = " << c.train.epochs << "\n";
  out << "train.l2_penalty = " << format_real(c.train.l2_penalty) << "\n";
}

inline Population load_dataset(const ExperimentConfig& c) {
  return c.dataset_path.empty() ? synth_population(c.synthetic)
                                : load_population(c.dataset_path, c.schema);
}

// ---------------------------------------------------------------------------
// One round of the game.

// k = ceil(fraction * negatives), guarded against products like 0.3 * 10
// landing a hair above an integer.
inline std::size_t provision_count(double fraction, std::size_t negatives) {
  const double raw = fraction * static_cast<double>(negatives);
  const double k = std::ceil(raw - 1e-9 * std::max(1.0, raw));
  return std::min(negatives, static_cast<std::size_t>(std::max(0.0, k)));
}

// Best responses of every agent in `pop` to a released subset and reveal
// draw. Initially positive agents do nothing.
inline GameOutcome play_round(const Population& pop, const LinearClassifier& clf,
                              const CostModel& cm, const std::map<int, Vector>& released,
                              const RevealState& reveal, ResponseMode mode) {
  GameOutcome out;
  out.reveal = reveal;
  for (const auto& [id, _] : released) out.chosen_ids.push_back(id);
  const FeatureSet Z = reveal.public_set();
  std::vector<const Agent*> order;
  for (const Agent& a : pop.agents()) order.push_back(&a);
  std::sort(order.begin(), order.end(), [](const Agent* a, const Agent* b) { return a->id < b->id; });
  for (const Agent* a : order) {
    AgentOutcome o;
    o.id = a->id;
    o.label = a->label;
    o.group = a->group;
    o.features = a->features;
    o.initially_positive = clf.predict(a->features) == 1;
    const auto it = released.find(a->id);
    o.provided = it != released.end();
    if (o.initially_positive) {
      o.action.kind = ActionKind::kNothing;
      o.action.effective_true_feature = a->features;
    } else if (mode == ResponseMode::kGated) {
      o.action = final_action(a->features, o.provided,
                              o.provided ? std::optional<Vector>(it->second) : std::nullopt, Z,
                              cm, clf);
    } else {
      o.action = open_action(a->features, Z, cm);
    }
    out.agents.push_back(std::move(o));
  }
  return out;
}

struct RateCount {
  std::size_t negatives = 0;
  std::size_t recourse = 0;
  std::size_t manipulate = 0;
};

inline RateCount count_actions(const GameOutcome& o, const std::string* group = nullptr) {
  RateCount c;
  for (const AgentOutcome& a : o.agents) {
    if (a.initially_positive || (group && a.group != *group)) continue;
    ++c.negatives;
    c.recourse += a.action.kind == ActionKind::kRecourse;
    c.manipulate += a.action.kind == ActionKind::kManipulate;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Experiment sweep.

struct RunMetadata {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  std::size_t agents = 0;
  std::size_t negatives = 0;
  CostModel costs;
  LinearClassifier clf;
};

struct ExperimentResult {
  std::vector<MetricsReport> reports;       // (run, subsidy, fraction) order
  std::vector<AggregateReport> aggregates;  // (subsidy, fraction) order; empty for one run
  std::vector<RunMetadata> runs;
  Standardization standardization;
  std::size_t actions_checked = 0;
  std::size_t sign_violations = 0;
};

namespace detail {

inline std::vector<std::size_t> sample_positions(std::size_t size, std::size_t want, Rng& rng) {
  std::vector<std::size_t> pos(size);
  std::iota(pos.begin(), pos.end(), 0);
  if (want == 0 || want >= size) return pos;
  for (std::size_t i = 0; i < want; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(size - i));
    std::swap(pos[i], pos[std::min(j, size - 1)]);
  }
  pos.resize(want);
  std::sort(pos.begin(), pos.end());
  return pos;
}

inline Selection select_candidates(const ExperimentConfig& c, const GameInstance& g,
                                   std::size_t k, const std::vector<int>& greedy_prefix,
                                   std::uint64_t seed) {
  switch (c.optimizer) {
    case OptimizerKind::kBruteForce:
      return brute_force_select(g, k, Objective::kUtility, Cardinality::kExactly);
    case OptimizerKind::kGreedy: {
      std::vector<int> s(greedy_prefix.begin(), greedy_prefix.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(s.begin(), s.end());
      return {s, 0.0};
    }
    case OptimizerKind::kLocalSearch:
      return local_search_select(g, k, c.local_search_iters);
    case OptimizerKind::kIlpP1:
      return exact_ilp_p1(g, k);
    case OptimizerKind::kRandomK:
      return random_k_select(g, k, seed);
  }
  throw Error(ErrorKind::kConfig, "field 'optimizer': unsupported");
}

}  // namespace detail

inline ExperimentResult run_experiment(const ExperimentConfig& config, const Population& data) {
  config.validate();
  ExperimentResult result;
  result.standardization = data.standardization();
  const std::string mode = std::string(to_string(config.optimizer)) + "/" + to_string(config.response_mode);
  const auto& groups = data.group_names();

  for (std::size_t run = 0; run < config.runs; ++run) {
    const std::uint64_t run_seed = derive_seed(config.base_seed, run);
    Rng rng(derive_seed(run_seed, 0));
    const Population sub = data.subset(detail::sample_positions(data.size(), config.sample_size, rng));
    const CostModel base_costs = random_cost_model(sub.dim(), rng);
    TrainConfig tc = config.train;
    tc.seed = derive_seed(run_seed, 1);
    const LinearClassifier clf = train_linear(sub, tc);
    const Partition part = partition(sub, clf);
    result.runs.push_back({run, run_seed, sub.size(), part.negatives.size(), base_costs, clf});

    FeatureSet neg_x, pos_x, targets;
    std::map<int, Vector> positives;
    std::vector<std::string> neg_group;
    for (int id : part.negatives) {
      const Agent& a = sub.by_id(id);
      neg_x.push_back(a.features);
      neg_group.push_back(a.group);
      targets.push_back(optimal_recourse(a.features, clf, base_costs));
    }
    for (int id : part.positives) {
      pos_x.push_back(sub.by_id(id).features);
      positives.emplace(id, pos_x.back());
    }
    std::size_t k_max = 0;
    for (double f : config.provision_fractions)
      k_max = std::max(k_max, provision_count(f, neg_x.size()));

    for (std::size_t ai = 0; ai < config.subsidies.size(); ++ai) {
      const double alpha = config.subsidies[ai];
      const CostModel cm = base_costs.with_subsidy(alpha);
      const GameInstance g =
          build_geometric_instance(part.negatives, neg_x, targets, pos_x, clf, cm, config.p);
      std::vector<int> prefix;
      if (config.optimizer == OptimizerKind::kGreedy) prefix = greedy_order(g, k_max);

      for (std::size_t fi = 0; fi < config.provision_fractions.size(); ++fi) {
        const double fraction = config.provision_fractions[fi];
        const std::size_t k = provision_count(fraction, neg_x.size());
        const Selection sel =
            detail::select_candidates(config, g, k, prefix, derive_seed(run_seed, 2 + ai, fi));
        std::map<int, Vector> released;
        for (int j : sel.subset) released.emplace(part.negatives[j], targets[j]);
        const RevealState reveal =
            draw_reveal(released, positives, config.p, derive_seed(run_seed, 1000, fi));
        const GameOutcome outcome = play_round(sub, clf, cm, released, reveal, config.response_mode);

        for (const AgentOutcome& a : outcome.agents) result.actions_checked += !a.initially_positive;
        result.sign_violations += check_thm_signs(outcome, clf).size();

        MetricsReport r;
        r.run_seed = run_seed;
        r.alpha = alpha;
        r.p = config.p;
        r.provision_fraction = fraction;
        r.mode = mode;
        const FeatureSet Z = reveal.public_set();
        const RateCount all = count_actions(outcome);
        if (all.negatives > 0) {
          r.recourse_rate = static_cast<double>(all.recourse) / static_cast<double>(all.negatives);
          r.manipulation_rate = static_cast<double>(all.manipulate) / static_cast<double>(all.negatives);
          r.social_cost = social_cost(Z, neg_x, targets, cm);
          r.utility_expected = expected_utility(sel.subset, g);
        }
        r.utility_realized = realized_utility(outcome, clf, derive_seed(run_seed, 2000 + ai, fi));
        for (const std::string& name : groups) {
          GroupReport gr;
          gr.group = name;
          const RateCount c = count_actions(outcome, &name);
          gr.negatives = c.negatives;
          if (c.negatives > 0) {
            gr.recourse_rate = static_cast<double>(c.recourse) / static_cast<double>(c.negatives);
            gr.manipulation_rate = static_cast<double>(c.manipulate) / static_cast<double>(c.negatives);
            FeatureSet gx, gt;
            for (std::size_t i = 0; i < neg_x.size(); ++i)
              if (neg_group[i] == name) {
                gx.push_back(neg_x[i]);
                gt.push_back(targets[i]);
              }
            gr.social_cost = social_cost(Z, gx, gt, cm);
          }
          r.groups.push_back(std::move(gr));
        }
        if (r.groups.size() == 2 && r.groups[0].negatives > 0 && r.groups[1].negatives > 0) {
          r.diff_rec = disparity(r.groups[0], r.groups[1], DisparityKind::kRecourse);
          if (r.groups[0].social_cost && r.groups[1].social_cost)
            r.diff_cost = disparity(r.groups[0], r.groups[1], DisparityKind::kCost);
        }
        result.reports.push_back(std::move(r));
      }
    }
  }

  // A single run has no spread to summarize; only per-run rows are emitted.
  if (config.runs < 2) return result;
  const std::size_t per_run = config.subsidies.size() * config.provision_fractions.size();
  for (std::size_t cell = 0; cell < per_run; ++cell) {
    std::vector<MetricsReport> same;
    for (std::size_t run = 0; run < config.runs; ++run) same.push_back(result.reports[run * per_run + cell]);
    result.aggregates.push_back(aggregate(same));
  }
  return result;
}

inline ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  return run_experiment(config, load_dataset(config));
}

// ---------------------------------------------------------------------------
// Output files.

inline std::string results_csv(const ExperimentResult& r) {
  std::string s = std::string(kResultsCsvHeader) + "\n";
  for (const MetricsReport& m : r.reports) s += csv_row(m) + "\n";
  for (const AggregateReport& a : r.aggregates) s += csv_row(a) + "\n";
  return s;
}

inline std::string summary_csv(const ExperimentResult& r) {
  std::string s = std::string(kSummaryCsvHeader) + "\n";
  for (const AggregateReport& a : r.aggregates)
    for (const std::string& row : summary_rows(a)) s += row + "\n";
  return s;
}

inline void write_metadata(std::ostream& out, const ExperimentConfig& c, const ExperimentResult& r,
                           const std::string& timestamp) {
  out << "timestamp = " << timestamp << "\n";
  write_config(out, c);
  out << "feature_means = " << join_reals(r.standardization.means) << "\n";
  out << "feature_scales = " << join_reals(r.standardization.scales) << "\n";
  out << "actions_checked = " << r.actions_checked << "\n";
  out << "sign_violations = " << r.sign_violations << "\n";
  for (const RunMetadata& m : r.runs) {
    out << "\n[run " << m.run << "]\n";
    out << "seed = " << m.seed << "\n";
    out << "agents = " << m.agents << "\n";
    out << "negatives = " << m.negatives << "\n";
    write_cost_model(out, m.costs);
    out << "weights = " << join_reals(m.clf.weights()) << "\n";
    out << "bias = " << format_real(m.clf.bias()) << "\n";
  }
}

inline void write_outputs(const std::string& dir, const ExperimentConfig& c,
                          const ExperimentResult& r, const std::string& timestamp) {
  std::filesystem::create_directories(dir);
  auto put = [&](const std::string& name, const std::string& body) {
    std::ofstream f(std::filesystem::path(dir) / name, std::ios::binary);
    if (!f) throw Error(ErrorKind::kConfig, "field 'output_dir': cannot write " + name);
    f << body;
  };
  put("results.csv", results_csv(r));
  put("summary.csv", summary_csv(r));
  std::ostringstream meta;
  write_metadata(meta, c, r, timestamp);
  put("metadata.txt", meta.str());
}

}  // namespace recourse
