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

#include <stdexcept>
#include <string>

namespace recourse {

enum class ErrorKind {
  kSchema,
  kParse,
  kEmptyInput,
  kDimensionMismatch,
  kDegenerateTraining,
  kInfeasibleRecourse,
  kPrecondition,
  kUndefinedMetric,
  kUnsupported,
  kConfig,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSchema: return "schema error";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kEmptyInput: return "empty input";
    case ErrorKind::kDimensionMismatch: return "dimension mismatch";
    case ErrorKind::kDegenerateTraining: return "degenerate training data";
    case ErrorKind::kInfeasibleRecourse: return "infeasible recourse";
    case ErrorKind::kPrecondition: return "precondition violated";
    case ErrorKind::kUndefinedMetric: return "undefined metric";
    case ErrorKind::kUnsupported: return "unsupported mode";
    case ErrorKind::kConfig: return "config error";
  }
  return "error";
}

// Every failure raised by the library carries a kind so callers (and the
// CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace recourse
