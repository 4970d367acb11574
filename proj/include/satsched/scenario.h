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

#ifndef SATSCHED_SCENARIO_H_
#define SATSCHED_SCENARIO_H_

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace satsched {

// Integer epoch seconds. All schedule times are whole seconds.
using Seconds = std::int64_t;

// Raised for malformed inputs and violated preconditions. The C API maps it
// to SATSCHED_BAD_INPUT; anything else escaping the core is an internal
// error.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ProblemKind { kEdssp, kMsjopp };

const char* ProblemKindName(ProblemKind kind);

// Reconfiguration time between two values of one payload parameter
// (frequency, bandwidth level, polarization or detection mode). Identical
// from/to values always cost zero, whether or not an entry is present.
class TransitionTable {
 public:
  TransitionTable() = default;

  void Set(int from, int to, Seconds seconds) { entries_[{from, to}] = seconds; }

  // Throws InputError("unknown parameter transition") when from != to and
  // no entry exists.
  Seconds Lookup(int from, int to) const;

  const std::map<std::pair<int, int>, Seconds>& entries() const {
    return entries_;
  }

  friend bool operator==(const TransitionTable&,
                         const TransitionTable&) = default;

 private:
  std::map<std::pair<int, int>, Seconds> entries_;
};

struct TransitionTables {
  TransitionTable polarization;
  TransitionTable mode;
  TransitionTable bandwidth;  // keyed by bandwidth level 1..4
  TransitionTable frequency;

  friend bool operator==(const TransitionTables&,
                         const TransitionTables&) = default;
};

struct Satellite {
  std::string id;
  double antenna_diameter_m = 1.0;
  double antenna_efficiency = 1.0;
  // Data volume per second per unit of bandwidth.
  double unit_data_rate = 1.0;
  double storage_capacity = 0.0;
  Seconds poweron_time_s = 0;
  TransitionTables transition_tables;
  int orbit_count = 1;

  friend bool operator==(const Satellite&, const Satellite&) = default;
};

struct EdsspTask {
  std::string id;
  Seconds est_s = 0;
  Seconds let_s = 0;
  Seconds duration_s = 0;
  double max_angle_rad = 0.0;
  int degree = 1;
  double wavelength_m = 0.0;
  int frequency = 0;
  int polarization = 0;
  int mode = 0;

  friend bool operator==(const EdsspTask&, const EdsspTask&) = default;
};

struct ObsTask {
  std::string id;
  Seconds est_s = 0;
  Seconds let_s = 0;
  Seconds duration_s = 0;
  double profit = 0.0;
  bool separable = false;

  friend bool operator==(const ObsTask&, const ObsTask&) = default;
};

struct AngleSample {
  Seconds time_s = 0;
  double angle_rad = 0.0;

  friend bool operator==(const AngleSample&, const AngleSample&) = default;
};

struct VisibleWindow {
  std::string satellite_id;
  std::string task_id;
  int orbit_index = 0;
  int window_index = 0;
  Seconds evt_s = 0;
  Seconds lvt_s = 0;
  // Piecewise-linear off-axis angle over [evt_s, lvt_s]. Empty for MSJOPP.
  std::vector<AngleSample> angle_profile;

  friend bool operator==(const VisibleWindow&, const VisibleWindow&) = default;
};

struct Horizon {
  Seconds start_s = 0;
  Seconds end_s = 0;

  friend bool operator==(const Horizon&, const Horizon&) = default;
};

// One problem instance. Only the task list matching `kind` is populated.
struct Scenario {
  ProblemKind kind = ProblemKind::kEdssp;
  Horizon horizon;
  std::vector<Satellite> satellites;
  std::vector<EdsspTask> edssp_tasks;
  std::vector<ObsTask> obs_tasks;
  std::vector<VisibleWindow> windows;
  // Strictly decreasing: level 1 (most important tasks) is the widest.
  std::array<double, 4> bandwidth_levels{};
  Seconds min_interval_s = 0;

  std::size_t task_count() const {
    return kind == ProblemKind::kEdssp ? edssp_tasks.size() : obs_tasks.size();
  }
  const std::string& task_id(std::size_t index) const {
    return kind == ProblemKind::kEdssp ? edssp_tasks[index].id
                                       : obs_tasks[index].id;
  }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Constraint identifiers reported by the validators and checkers. The C*
// and M* numbering follows the constraint lists of the two models.
enum class ConstraintId {
  kScenario,
  kC1Est,
  kC2Let,
  kC3Angle,
  kC4Evt,
  kC5Lvt,
  kC6Storage,
  kC7Transition,
  kC8Once,
  kC9Domain,
  kM1Est,
  kM2Let,
  kM3SubEst,
  kM4SubLet,
  kM5Evt,
  kM6Lvt,
  kM7SubEvt,
  kM8SubLvt,
  kM9Duration,
  kM10SplitSum,
  kM11Gap,
  kM12SubGap,
  kM13MixedGap,
  kM14Once,
  kM15SubOnce,
  kMDomain,
};

const char* ConstraintIdName(ConstraintId id);
// Inverse of ConstraintIdName; throws InputError on unknown names.
ConstraintId ConstraintIdFromName(const std::string& name);

struct Violation {
  ConstraintId constraint_id = ConstraintId::kScenario;
  std::vector<std::string> entities;
  std::string message;

  // "<constraint_id> <entity[,entity...]> <message>"
  std::string ToLine() const;

  friend bool operator==(const Violation&, const Violation&) = default;
};

bool HasViolation(const std::vector<Violation>& violations, ConstraintId id);

// Checks every type invariant of the scenario. Never throws.
std::vector<Violation> ValidateScenario(const Scenario& scenario);

// Linear interpolation of the window's angle profile at time `t`.
// Throws InputError("time outside window") if t is not in [evt_s, lvt_s] and
// InputError if the profile is empty.
double AngleAt(const VisibleWindow& window, double t);

}  // namespace satsched

#endif  // SATSCHED_SCENARIO_H_
