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

#ifndef SATSCHED_BENCH_H_
#define SATSCHED_BENCH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "satsched/generate.h"
#include "satsched/rl_ea.h"
#include "satsched/scenario.h"

namespace satsched::bench {

struct Instance {
  std::string id;
  Scenario scenario;
};

// Instances "<kind>-s<seed>" generated from `params` with each seed.
std::vector<Instance> GenerateSuite(ProblemKind kind,
                                    const GenerateParams& params,
                                    const std::vector<std::uint64_t>& seeds);

struct Row {
  std::string instance_id;
  std::string method;  // rl-ea, baseline, oracle
  double objective = 0.0;
  // (best known - objective) / best known over the instance's methods;
  // 0 when the best known objective is 0.
  double optimality_gap = 0.0;
  int generations = 0;
  double wall_time_s = 0.0;
  std::string status = "ok";  // or "error: <message>"
};

// Per instance: the RL-EA, the same EA with uniform operator choice and equal
// budget and seed, and the oracle when the instance is small enough. Failures
// become rows with an error status. Rows are sorted by instance id.
std::vector<Row> RunBenchmark(const std::vector<Instance>& instances,
                              const rl_ea::Config& config);

// instance_id,method,objective,optimality_gap,generations,wall_time_s,status
std::string ToCsv(const std::vector<Row>& rows);
// Array of objects with the CSV column names as keys.
std::string ToJson(const std::vector<Row>& rows);

}  // namespace satsched::bench

#endif  // SATSCHED_BENCH_H_
