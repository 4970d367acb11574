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

#ifndef SATSCHED_MSJOPP_H_
#define SATSCHED_MSJOPP_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "satsched/scenario.h"

// Multi-satellite joint observation planning with separable tasks.
namespace satsched::msjopp {

// How a separable task is cut into sub-tasks. An empty duration list marks a
// task that cannot be covered by its windows.
struct SplitPlan {
  std::string parent_task_id;
  std::vector<Seconds> subtask_durations;

  bool feasible() const { return !subtask_durations.empty(); }

  friend bool operator==(const SplitPlan&, const SplitPlan&) = default;
};

struct Assignment {
  std::string satellite_id;
  std::string task_id;
  std::optional<int> subtask_index;  // set iff the task is separable
  int window_index = 0;
  Seconds start_s = 0;
  Seconds observed_s = 0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Schedule {
  std::vector<Assignment> assignments;
  std::map<std::string, SplitPlan> split_plans;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Greedy longest-usable-window-first split. Each window contributes a chunk
// of min(remaining, usable length), where usable length is the overlap of the
// window with [est, let]. Throws InputError for inseparable tasks.
SplitPlan SplitTask(const ObsTask& task,
                    std::span<const VisibleWindow> windows);

// Checks constraints M1..M15. Reference and domain problems are reported as
// M_DOMAIN and the offending assignment is skipped for the other checks.
std::vector<Violation> CheckSchedule(const Scenario& scenario,
                                     const Schedule& schedule);

// f1 + f2: profits of scheduled inseparable tasks plus profits of separable
// tasks whose every planned sub-task is scheduled.
double ObjectiveValue(const Scenario& scenario, const Schedule& schedule);

class Decoder {
 public:
  struct State {
    struct Placed {
      int task;
      int subtask;  // -1 for inseparable tasks
      int window;
      Seconds start;
      Seconds end;
    };
    std::vector<std::vector<Placed>> satellites;  // per satellite, by start
    std::vector<Placed> order;
    std::vector<bool> placed;
    std::vector<double> profit;
  };

  // Throws InputError when the scenario is not an MSJOPP scenario or fails
  // validation.
  explicit Decoder(const Scenario& scenario);

  const Scenario& scenario() const { return *scenario_; }
  int task_count() const { return static_cast<int>(plans_.size()); }
  const SplitPlan& plan(int task) const { return plans_[task]; }

  State EmptyState() const;
  static double Objective(const State& state);

  // Inseparable tasks go to the earliest feasible start over all windows.
  // Separable tasks place every sub-task of their split plan in turn; if any
  // sub-task fails, nothing is placed and the call returns false.
  bool TryPlace(State& state, int task) const;

  Schedule Decode(std::span<const int> order) const;
  double Evaluate(std::span<const int> order) const;
  Schedule ToSchedule(const State& state) const;

  double ProfitBound(int task) const;

 private:
  struct WindowInfo {
    int window;
    int satellite;
  };

  // Earliest start of an `observed`-long piece of `task` on one window, or -1.
  Seconds EarliestStart(const State& state, int task, Seconds observed,
                        const WindowInfo& info) const;
  bool PlacePiece(State& state, int task, int subtask, Seconds observed) const;

  const Scenario* scenario_;
  std::vector<std::vector<WindowInfo>> windows_;  // per task, scan order
  std::vector<SplitPlan> plans_;  // per task; empty for inseparable tasks
};

}  // namespace satsched::msjopp

#endif  // SATSCHED_MSJOPP_H_
