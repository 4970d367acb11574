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

#ifndef SATSCHED_IO_H_
#define SATSCHED_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satsched/rl_ea.h"
#include "satsched/scenario.h"
#include "satsched/solver.h"

// JSON scenario and result documents, trace CSV and Gantt SVG export.
// Parsing is strict: missing keys, unknown keys, wrong types and fractional
// times all raise InputError naming the offending path.
namespace satsched::io {

inline constexpr int kFormatVersion = 1;

// Parses and validates; a scenario with violations is rejected with their
// lines in the error message.
Scenario ParseScenario(const std::string& text);
// Structure only, no invariant checks.
Scenario ParseScenarioUnchecked(const std::string& text);
std::string SerializeScenario(const Scenario& scenario);

struct ResultStats {
  int generations = 0;
  int best_generation = 0;
  std::int64_t nodes_explored = 0;

  friend bool operator==(const ResultStats&, const ResultStats&) = default;
};

struct ResultFile {
  std::string method;  // "rl-ea", "baseline" or "oracle"
  Solution solution;
  std::vector<Violation> violations;
  std::optional<std::string> trace;  // reference to the trace CSV
  std::optional<rl_ea::Config> config;
  ResultStats stats;
  Scenario scenario;
};

std::string SerializeResult(const ResultFile& result);
// The embedded scenario is validated like ParseScenario does.
ResultFile ParseResult(const std::string& text);

// generation,state,action,reward,best_fitness,mean_fitness,epsilon
std::string TraceCsv(const std::vector<rl_ea::TraceRow>& trace);

// One lane per satellite-orbit and exactly one rect per assignment.
std::string GanttSvg(const Scenario& scenario, const Solution& solution);

// %.17g; round-trips every finite double.
std::string FormatDouble(double value);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace satsched::io

#endif  // SATSCHED_IO_H_
