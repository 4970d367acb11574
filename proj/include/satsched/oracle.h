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

#ifndef SATSCHED_ORACLE_H_
#define SATSCHED_ORACLE_H_

#include <cstdint>

#include "satsched/edssp.h"
#include "satsched/msjopp.h"
#include "satsched/scenario.h"

// Exhaustive reference solvers for desk-sized instances. They enumerate every
// ordering of every task subset through the greedy decoders, so their optimum
// is the optimum over the decoders' earliest-start solution space.
namespace satsched::oracle {

inline constexpr int kEdsspMaxTasks = 8;
inline constexpr int kMsjoppMaxTasks = 6;

template <typename ScheduleT>
struct OracleResult {
  double best_objective = 0.0;
  ScheduleT best_schedule;
  std::int64_t nodes_explored = 0;
};

// Both throw InputError when the scenario has more than `max_tasks` tasks.
OracleResult<edssp::Schedule> BruteForceEdssp(
    const Scenario& scenario, int max_tasks = kEdsspMaxTasks);
OracleResult<msjopp::Schedule> BruteForceMsjopp(
    const Scenario& scenario, int max_tasks = kMsjoppMaxTasks);

}  // namespace satsched::oracle

#endif  // SATSCHED_ORACLE_H_
