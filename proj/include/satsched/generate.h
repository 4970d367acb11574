// Copyright 2026 The satsched Authors.
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

#ifndef SATSCHED_GENERATE_H_
#define SATSCHED_GENERATE_H_

#include <cstdint>

#include "satsched/scenario.h"

namespace satsched {

struct GenerateParams {
  int n_satellites = 2;
  int n_tasks = 10;
  int n_windows_per_task = 3;
  double separable_fraction = 0.3;  // MSJOPP only
  Seconds horizon_s = 3600;
  std::uint64_t seed = 1;
  int orbits_per_satellite = 2;  // EDSSP only; MSJOPP satellites have one
  Seconds min_duration_s = 10;
  Seconds max_duration_s = 60;
};

// Deterministic random instance. Every task gets at least one window in which
// it can be scheduled on an otherwise empty plan (for separable tasks: a
// feasible split). Throws InputError for contradictory parameters.
Scenario GenerateScenario(ProblemKind kind, const GenerateParams& params);

}  // namespace satsched

#endif  // SATSCHED_GENERATE_H_
