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
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_set>
#include <utility>
#include <vector>

#include "recourse/error.hpp"
#include "recourse/vec.hpp"

namespace recourse {

struct Agent {
  int id = 0;
  Vector features;
  int label = 0;
  std::string group;
};

// Per-column affine map applied at load time: x' = (x - mean) / scale.
// A scale of 0 marks a constant column, which maps to all zeros.
struct Standardization {
  Vector means;
  Vector scales;
};

class Population {
 public:
  Population() = default;

  // Validates the invariants; throws on violation.
  Population(std::vector<Agent> agents, std::vector<std::string> group_names,
             Standardization standardization = {})
      : agents_(std::move(agents)),
        group_names_(std::move(group_names)),
        standardization_(std::move(standardization)) {
    dim_ = agents_.empty() ? 0 : agents_.front().features.size();
    std::unordered_set<int> ids;
    for (const Agent& a : agents_) {
      require_same_dim(a.features.size(), dim_, "Population");
      if (!all_finite(a.features)) {
        throw Error(ErrorKind::kPrecondition,
                    "agent " + std::to_string(a.id) + " has non-finite features");
      }
      if (a.label != 0 && a.label != 1) {
        throw Error(ErrorKind::kPrecondition,
                    "agent " + std::to_string(a.id) + " label not in {0,1}");
      }
      if (!ids.insert(a.id).second) {
        throw Error(ErrorKind::kPrecondition,
                    "duplicate agent id " + std::to_string(a.id));
      }
      if (std::find(group_names_.begin(), group_names_.end(), a.group) ==
          group_names_.end()) {
        throw Error(ErrorKind::kPrecondition, "unknown group '" + a.group + "'");
      }
    }
  }

  const std::vector<Agent>& agents() const { return agents_; }
  std::size_t size() const { return agents_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& group_names() const { return group_names_; }
  const Standardization& standardization() const { return standardization_; }

  const Agent& by_id(int id) const {
    auto it = std::find_if(agents_.begin(), agents_.end(),
                           [id](const Agent& a) { return a.id == id; });
    if (it == agents_.end()) {
      throw Error(ErrorKind::kPrecondition, "no agent with id " + std::to_string(id));
    }
    return *it;
  }

  // Agents at the given positions, order preserved, ids kept.
  Population subset(const std::vector<std::size_t>& positions) const {
    std::vector<Agent> picked;
    picked.reserve(positions.size());
    for (std::size_t pos : positions) picked.push_back(agents_.at(pos));
    return Population(std::move(picked), group_names_, standardization_);
  }

 private:
  std::vector<Agent> agents_;
  std::size_t dim_ = 0;
  std::vector<std::string> group_names_;
  Standardization standardization_;
};

struct CsvSchema {
  std::vector<std::string> features;
  std::string label;
  std::string group;
};

// Zero-mean / unit-variance per column (population variance). Columns with
// zero variance become all zeros.
inline Standardization fit_standardization(const std::vector<Agent>& agents,
                                           std::size_t dim) {
  Standardization s{Vector(dim, 0.0), Vector(dim, 0.0)};
  if (agents.empty()) return s;
  const double n = static_cast<double>(agents.size());
  for (const Agent& a : agents) {
    for (std::size_t k = 0; k < dim; ++k) s.means[k] += a.features[k];
  }
  for (double& m : s.means) m /= n;
  for (const Agent& a : agents) {
    for (std::size_t k = 0; k < dim; ++k) {
      const double d = a.features[k] - s.means[k];
      s.scales[k] += d * d;
    }
  }
  for (double& v : s.scales) v = std::sqrt(v / n);
  return s;
}

inline void apply_standardization(std::vector<Agent>& agents,
                                  const Standardization& s) {
  for (Agent& a : agents) {
    for (std::size_t k = 0; k < a.features.size(); ++k) {
      a.features[k] =
          s.scales[k] > 0.0 ? (a.features[k] - s.means[k]) / s.scales[k] : 0.0;
    }
  }
}

inline Population standardized(std::vector<Agent> agents,
                               std::vector<std::string> group_names) {
  const std::size_t dim = agents.empty() ? 0 : agents.front().features.size();
  Standardization s = fit_standardization(agents, dim);
  apply_standardization(agents, s);
  return Population(std::move(agents), std::move(group_names), std::move(s));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Comma split with double-quote support (no embedded newlines).
inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.emplace_back(trim(cur));
  return out;
}

inline bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace detail

// Parses a header-first CSV. Row order defines agent ids (0-based data rows);
// features are standardized over the file. Error messages name the 1-based
// data row.
inline Population parse_population(std::istream& in, const CsvSchema& schema) {
  std::string line;
  if (!std::getline(in, line) || detail::trim(line).empty()) {
    throw Error(ErrorKind::kEmptyInput, "CSV has no header row");
  }
  const std::vector<std::string> header = detail::split_csv_line(line);
  auto column = [&](const std::string& name) -> std::size_t {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw Error(ErrorKind::kSchema, "missing column '" + name + "'");
    }
    return static_cast<std::size_t>(it - header.begin());
  };
  if (schema.features.empty()) {
    throw Error(ErrorKind::kSchema, "schema names no feature columns");
  }
  std::vector<std::size_t> feature_cols;
  for (const auto& f : schema.features) feature_cols.push_back(column(f));
  const std::size_t label_col = column(schema.label);
  const std::size_t group_col = column(schema.group);

  std::vector<Agent> agents;
  std::vector<std::string> group_names;
  int row = 0;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    ++row;
    const std::vector<std::string> cells = detail::split_csv_line(line);
    if (cells.size() != header.size()) {
      throw Error(ErrorKind::kParse, "row " + std::to_string(row) + ": expected " +
                                         std::to_string(header.size()) +
                                         " cells, got " +
                                         std::to_string(cells.size()));
    }
    Agent a;
    a.id = row - 1;
    a.features.resize(feature_cols.size());
    for (std::size_t k = 0; k < feature_cols.size(); ++k) {
      if (!detail::parse_double(cells[feature_cols[k]], a.features[k])) {
        throw Error(ErrorKind::kParse, "row " + std::to_string(row) + ": column '" +
                                           schema.features[k] +
                                           "' is not a finite number");
      }
    }
    const std::string& lab = cells[label_col];
    if (lab == "0") {
      a.label = 0;
    } else if (lab == "1") {
      a.label = 1;
    } else {
      throw Error(ErrorKind::kParse, "row " + std::to_string(row) + ": label '" +
                                         lab + "' is not 0 or 1");
    }
    a.group = cells[group_col];
    if (std::find(group_names.begin(), group_names.end(), a.group) ==
        group_names.end()) {
      group_names.push_back(a.group);
    }
    agents.push_back(std::move(a));
  }
  if (agents.empty()) {
    throw Error(ErrorKind::kEmptyInput, "CSV has a header but no data rows");
  }
  return standardized(std::move(agents), std::move(group_names));
}

inline Population load_population(const std::string& path,
                                  const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kEmptyInput, "cannot open '" + path + "'");
  return parse_population(in, schema);
}

}  // namespace recourse
