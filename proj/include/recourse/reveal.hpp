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
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "recourse/error.hpp"
#include "recourse/response.hpp"
#include "recourse/rng.hpp"
#include "recourse/vec.hpp"

namespace recourse {

inline constexpr double kDefaultRevealProbability = 0.7;

struct RevealState {
  std::map<int, Vector> selected_recourse;  // agent id -> released action
  std::vector<int> revealed_recourse_ids;
  std::vector<int> revealed_positive_ids;
  FeatureSet revealed_recourse;   // Z_R, sorted and deduplicated
  FeatureSet revealed_positives;  // Z_+, sorted and deduplicated
  double p = kDefaultRevealProbability;
  std::uint64_t seed = 0;

  // Z = Z_R ∪ Z_+ as a sorted, duplicate-free set.
  FeatureSet public_set() const {
    FeatureSet z = revealed_recourse;
    z.insert(z.end(), revealed_positives.begin(), revealed_positives.end());
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    return z;
  }

  bool operator==(const RevealState&) const = default;
};

namespace detail {

inline FeatureSet as_sorted_set(FeatureSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

// Every candidate (released action or initial positive) gets one uniform
// draw, consumed in ascending agent-id order, and is revealed iff draw < p.
// Using the same seed with a larger p therefore only adds elements.
inline RevealState draw_reveal(const std::map<int, Vector>& selected_recourse,
                               const std::map<int, Vector>& positives, double p,
                               std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kPrecondition, "reveal probability must lie in [0, 1]");
  }
  RevealState state;
  state.selected_recourse = selected_recourse;
  state.p = p;
  state.seed = seed;

  std::vector<std::pair<int, bool>> order;  // (id, is_recourse)
  for (const auto& [id, _] : selected_recourse) order.emplace_back(id, true);
  for (const auto& [id, _] : positives) order.emplace_back(id, false);
  std::sort(order.begin(), order.end());

  Rng rng(seed);
  FeatureSet zr, zp;
  for (const auto& [id, is_recourse] : order) {
    const bool revealed = uniform01(rng) < p;
    if (!revealed) continue;
    if (is_recourse) {
      state.revealed_recourse_ids.push_back(id);
      zr.push_back(selected_recourse.at(id));
    } else {
      state.revealed_positive_ids.push_back(id);
      zp.push_back(positives.at(id));
    }
  }
  state.revealed_recourse = detail::as_sorted_set(std::move(zr));
  state.revealed_positives = detail::as_sorted_set(std::move(zp));
  return state;
}

}  // namespace recourse
