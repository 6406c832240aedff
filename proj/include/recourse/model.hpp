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
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "recourse/error.hpp"
#include "recourse/population.hpp"
#include "recourse/rng.hpp"
#include "recourse/vec.hpp"

namespace recourse {

inline double logistic(double s) {
  if (s >= 0.0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

// Linear score model. predict() thresholds the score; qualification() reads
// the same score through the logistic link as Pr[y = 1 | x].
class LinearClassifier {
 public:
  LinearClassifier() = default;
  LinearClassifier(Vector weights, double bias, double score_threshold = 0.0)
      : weights_(std::move(weights)), bias_(bias), threshold_(score_threshold) {
    if (!all_finite(weights_) || !std::isfinite(bias_) ||
        !std::isfinite(threshold_)) {
      throw Error(ErrorKind::kPrecondition, "classifier parameters must be finite");
    }
  }

  const Vector& weights() const { return weights_; }
  double bias() const { return bias_; }
  double score_threshold() const { return threshold_; }
  std::size_t dim() const { return weights_.size(); }

  double score(std::span<const double> x) const {
    require_same_dim(x.size(), weights_.size(), "LinearClassifier::score");
    return dot(weights_, x) + bias_;
  }

  // Ties (score exactly on the threshold) classify positive.
  int predict(std::span<const double> x) const {
    return score(x) >= threshold_ ? 1 : 0;
  }

  double qualification(std::span<const double> x) const {
    return logistic(score(x));
  }

  bool operator==(const LinearClassifier&) const = default;

 private:
  Vector weights_;
  double bias_ = 0.0;
  double threshold_ = 0.0;
};

inline int predict(const LinearClassifier& clf, std::span<const double> x) {
  return clf.predict(x);
}

inline double qualification(const LinearClassifier& clf,
                            std::span<const double> x) {
  return clf.qualification(x);
}

struct TrainConfig {
  double learning_rate = 0.1;
  int epochs = 500;
  double l2_penalty = 1e-4;
  std::uint64_t seed = 0;
};

inline double training_accuracy(const LinearClassifier& clf,
                                const Population& pop) {
  if (pop.size() == 0) return 0.0;
  std::size_t hits = 0;
  for (const Agent& a : pop.agents()) hits += clf.predict(a.features) == a.label;
  return static_cast<double>(hits) / static_cast<double>(pop.size());
}

// Logistic regression by full-batch gradient descent with an l2 penalty on
// the weights (not the bias). Weights start at small seeded noise.
//
// If the fitted model ends below the majority-class rate, the bias is
// re-chosen by an exhaustive scan over the sorted training scores, which
// maximizes accuracy along the learned direction and always includes the
// all-majority threshold.
inline LinearClassifier train_linear(const Population& pop,
                                     const TrainConfig& config = {}) {
  std::size_t positives = 0;
  for (const Agent& a : pop.agents()) positives += a.label;
  if (positives == 0 || positives == pop.size()) {
    throw Error(ErrorKind::kDegenerateTraining,
                "training data needs at least one agent of each label");
  }
  const std::size_t d = pop.dim();
  const double n = static_cast<double>(pop.size());

  Rng rng(config.seed);
  Vector w(d);
  for (double& wi : w) wi = uniform(rng, -0.01, 0.01);
  double b = 0.0;

  Vector grad(d);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double grad_b = 0.0;
    for (const Agent& a : pop.agents()) {
      const double err = logistic(dot(w, a.features) + b) - a.label;
      for (std::size_t k = 0; k < d; ++k) grad[k] += err * a.features[k];
      grad_b += err;
    }
    for (std::size_t k = 0; k < d; ++k) {
      w[k] -= config.learning_rate * (grad[k] / n + config.l2_penalty * w[k]);
    }
    b -= config.learning_rate * grad_b / n;
  }

  LinearClassifier clf(w, b);
  const double majority =
      static_cast<double>(std::max(positives, pop.size() - positives)) / static_cast<double>(pop.size());
  if (training_accuracy(clf, pop) >= majority) return clf;

  std::vector<std::pair<double, int>> scored;
  for (const Agent& a : pop.agents()) scored.emplace_back(dot(w, a.features), a.label);
  std::sort(scored.begin(), scored.end());
  // Cut between sorted scores; everything at or above the cut is positive.
  auto correct = static_cast<std::ptrdiff_t>(positives);  // cut below all
  std::ptrdiff_t best_correct = correct;
  double best_cut = scored.front().first - 1.0;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    correct += scored[i].second == 0 ? 1 : -1;
    if (i + 1 < scored.size() && scored[i + 1].first == scored[i].first) continue;
    const double cut = i + 1 < scored.size()
                           ? 0.5 * (scored[i].first + scored[i + 1].first)
                           : scored[i].first + 1.0;
    if (correct > best_correct) {
      best_correct = correct;
      best_cut = cut;
    }
  }
  return LinearClassifier(w, -best_cut);
}

// Plain-text key = value format. Extra keys (standardization constants,
// cost weights) ride along in the same file.
inline std::string join_reals(const Vector& v) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

inline Vector split_reals(const std::string& s, const std::string& key) {
  Vector out;
  if (detail::trim(s).empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    if (!detail::parse_double(item, v)) {
      throw Error(ErrorKind::kParse, "key '" + key + "': bad number '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

inline void write_classifier(std::ostream& out, const LinearClassifier& clf,
                             const Standardization& standardization = {}) {
  out << std::setprecision(17);
  out << "weights = " << join_reals(clf.weights()) << "\n";
  out << "bias = " << clf.bias() << "\n";
  out << "score_threshold = " << clf.score_threshold() << "\n";
  out << "feature_means = " << join_reals(standardization.means) << "\n";
  out << "feature_scales = " << join_reals(standardization.scales) << "\n";
}

inline std::map<std::string, std::string> read_key_values(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = detail::trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(lineno) + ": expected key = value");
    }
    kv[std::string(detail::trim(view.substr(0, eq)))] =
        std::string(detail::trim(view.substr(eq + 1)));
  }
  return kv;
}

inline LinearClassifier read_classifier(std::istream& in,
                                        Standardization* standardization = nullptr) {
  auto kv = read_key_values(in);
  auto get = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorKind::kSchema, "missing key '" + key + "'");
    return it->second;
  };
  auto scalar = [&](const std::string& key) {
    double v = 0.0;
    if (!detail::parse_double(get(key), v)) {
      throw Error(ErrorKind::kParse, "key '" + key + "' is not a number");
    }
    return v;
  };
  LinearClassifier clf(split_reals(get("weights"), "weights"), scalar("bias"),
                       scalar("score_threshold"));
  if (standardization != nullptr) {
    if (kv.count("feature_means")) standardization->means = split_reals(kv["feature_means"], "feature_means");
    if (kv.count("feature_scales")) standardization->scales = split_reals(kv["feature_scales"], "feature_scales");
  }
  return clf;
}

struct Partition {
  std::vector<int> positives;
  std::vector<int> negatives;
};

inline Partition partition(const Population& pop, const LinearClassifier& clf) {
  require_same_dim(clf.dim(), pop.dim(), "partition");
  Partition out;
  for (const Agent& a : pop.agents()) {
    (clf.predict(a.features) ? out.positives : out.negatives).push_back(a.id);
  }
  return out;
}

}  // namespace recourse
