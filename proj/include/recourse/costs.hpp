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
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>

#include "recourse/error.hpp"
#include "recourse/model.hpp"
#include "recourse/rng.hpp"
#include "recourse/vec.hpp"

namespace recourse {

// Weighted l2 costs shared by every agent:
//   c_R(x, z) = (1 - alpha) * ||w_R ⊙ (x - z)||,  c_M(x, z) = ||w_M ⊙ (x - z)||.
class CostModel {
 public:
  CostModel() = default;
  CostModel(Vector recourse_weights, Vector manipulation_weights,
            double subsidy = 0.0)
      : w_recourse_(std::move(recourse_weights)),
        w_manipulation_(std::move(manipulation_weights)),
        alpha_(subsidy) {
    require_same_dim(w_recourse_.size(), w_manipulation_.size(), "CostModel");
    for (double w : w_recourse_) check_weight(w);
    for (double w : w_manipulation_) check_weight(w);
    if (!(alpha_ >= 0.0 && alpha_ <= 1.0)) {
      throw Error(ErrorKind::kPrecondition, "subsidy must lie in [0, 1]");
    }
  }

  const Vector& recourse_weights() const { return w_recourse_; }
  const Vector& manipulation_weights() const { return w_manipulation_; }
  double subsidy() const { return alpha_; }
  std::size_t dim() const { return w_recourse_.size(); }

  CostModel with_subsidy(double alpha) const {
    return CostModel(w_recourse_, w_manipulation_, alpha);
  }

  // Unsubsidized recourse cost; recourse_cost() scales this by (1 - alpha).
  double base_recourse_cost(std::span<const double> x,
                            std::span<const double> z) const {
    return weighted_distance(w_recourse_, x, z);
  }

  double recourse_cost(std::span<const double> x, std::span<const double> z) const {
    return (1.0 - alpha_) * base_recourse_cost(x, z);
  }

  double manipulation_cost(std::span<const double> x,
                           std::span<const double> z) const {
    return weighted_distance(w_manipulation_, x, z);
  }

 private:
  static void check_weight(double w) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorKind::kPrecondition, "cost weights must be finite and >= 0");
    }
  }

  Vector w_recourse_;
  Vector w_manipulation_;
  double alpha_ = 0.0;
};

inline double recourse_cost(const CostModel& cm, std::span<const double> x,
                            std::span<const double> z) {
  return cm.recourse_cost(x, z);
}

inline double manipulation_cost(const CostModel& cm, std::span<const double> x,
                                std::span<const double> z) {
  return cm.manipulation_cost(x, z);
}

// Each weight component uniform in [lo, hi).
inline CostModel random_cost_model(std::size_t dim, Rng& rng, double lo = 0.5,
                                   double hi = 2.0, double subsidy = 0.0) {
  Vector wr(dim), wm(dim);
  for (double& w : wr) w = uniform(rng, lo, hi);
  for (double& w : wm) w = uniform(rng, lo, hi);
  return CostModel(std::move(wr), std::move(wm), subsidy);
}

inline void write_cost_model(std::ostream& out, const CostModel& cm) {
  out << "recourse_weights = " << join_reals(cm.recourse_weights()) << "\n";
  out << "manipulation_weights = " << join_reals(cm.manipulation_weights()) << "\n";
}

}  // namespace recourse
