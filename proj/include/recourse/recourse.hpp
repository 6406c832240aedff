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

// Umbrella header for the whole library.
#pragma once

#include "recourse/error.hpp"
#include "recourse/vec.hpp"
#include "recourse/rng.hpp"
#include "recourse/population.hpp"
#include "recourse/model.hpp"
#include "recourse/costs.hpp"
#include "recourse/response.hpp"
#include "recourse/reveal.hpp"
#include "recourse/optimizer.hpp"
#include "recourse/metrics.hpp"
#include "recourse/theory.hpp"
#include "recourse/harness.hpp"
