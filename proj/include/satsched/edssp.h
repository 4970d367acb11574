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

#ifndef SATSCHED_EDSSP_H_
#define SATSCHED_EDSSP_H_

#include <span>
#include <string>
#include <vector>

#include "satsched/scenario.h"

// Electromagnetic detection satellite scheduling: antenna gain physics,
// bandwidth and data-volume accounting, the constraint checker and the
// permutation decoder used by the evolutionary search.
namespace satsched::edssp {

// Bessel function of the first kind for order 1 or 3. Ascending series in
// extended precision for u <= 20, normalized backward recurrence beyond.
// Throws InputError for other orders or negative u.
double BesselJ(int order, double u);

// J_n(u) / u^n, well defined at u = 0 (limit 1 / (2^n n!)).
double BesselJOverPower(int order, double u);

// Boresight gain eta * pi^2 * D^2 / lambda^2, linear scale.
double PeakGain(const Satellite& sat, const EdsspTask& task);

// Half-power beamwidth 70 * lambda / D, taken in degrees and returned in
// radians.
double Theta3db(const EdsspTask& task, const Satellite& sat);

// g0 * [J1(u)/(2u) + 36 J3(u)/u^3]^2 with u = 2.07123 sin(theta)/sin(theta3db).
double SignalGain(double theta, double theta3db, double g0);

// Bandwidth level 1..4 for an importance degree in [1, 100].
int BandwidthLevel(int degree);
double BandwidthForDegree(int degree, const std::array<double, 4>& levels);

// Profit multiplier for a bandwidth: b / levels[0]. Throws InputError when
// `bandwidth` is not one of the levels.
double BandwidthGain(double bandwidth, const std::array<double, 4>& levels);

// Data volume beta * bandwidth(degree) * duration.
double DataVolume(const Satellite& sat, const EdsspTask& task,
                  const std::array<double, 4>& levels);

// Reconfiguration time between consecutive tasks on one satellite: the max
// of the four parameter transitions, the power-on time and zero.
Seconds TransitionTime(const Satellite& sat, const EdsspTask& from,
                       const EdsspTask& to);

// Smallest off-axis angle over [from, to] (clipped to the window).
double MinAngleOver(const VisibleWindow& window, Seconds from, Seconds to);

struct Assignment {
  std::string satellite_id;
  std::string task_id;
  int orbit_index = 0;
  int window_index = 0;
  Seconds start_s = 0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Schedule {
  std::vector<Assignment> assignments;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Full check of constraints C1..C9. Unknown references yield one C9 entry per
// offending assignment; the remaining assignments are still checked.
std::vector<Violation> CheckSchedule(const Scenario& scenario,
                                     const Schedule& schedule);

// Sum of G_j * Omega(bandwidth_j), with G_j taken at the minimum angle of
// the executed interval. Assignments with unknown references contribute 0.
// Terms are summed in scenario task order, independent of assignment order.
double ObjectiveValue(const Scenario& scenario, const Schedule& schedule);

// Greedy earliest-feasible decoder. The scenario must outlive the decoder.
class Decoder {
 public:
  // Placement state of a partial decode; copyable so that search procedures
  // can branch on it.
  struct State {
    struct Placed {
      int task;
      int window;
      Seconds start;
      Seconds end;
    };
    std::vector<std::vector<Placed>> lanes;  // per satellite-orbit, by start
    std::vector<double> storage_used;        // per satellite-orbit
    std::vector<Placed> order;               // in placement order
    std::vector<bool> placed;                // per task
    std::vector<double> profit;              // per task, 0 when unplaced
  };

  // Objective of a (partial) decode, summed in task order so that equal
  // assignment sets give bit-identical values.
  static double Objective(const State& state);

  // Throws InputError when the scenario is not an EDSSP scenario or fails
  // validation.
  explicit Decoder(const Scenario& scenario);

  const Scenario& scenario() const { return *scenario_; }
  int task_count() const { return static_cast<int>(tasks_.size()); }

  State EmptyState() const;

  // Places `task` at its earliest feasible start over all its windows; ties
  // go to the lowest satellite, then orbit, then EVT. Returns false and
  // leaves `state` untouched when no placement exists.
  bool TryPlace(State& state, int task) const;

  Schedule Decode(std::span<const int> order) const;
  double Evaluate(std::span<const int> order) const;
  Schedule ToSchedule(const State& state) const;

  // Upper bound of what `task` can contribute to the objective.
  double ProfitBound(int task) const { return tasks_[task].profit_bound; }

 private:
  struct WindowInfo {
    int window;  // index into scenario windows
    int lane;
    int satellite;
    double g0;
    double theta3db;
    std::vector<Seconds> bad_seconds;  // angle > max over [evt, lvt]
  };
  struct TaskInfo {
    std::vector<WindowInfo> windows;
    double omega;
    double profit_bound;
  };

  Seconds Transition(int satellite, int from, int to) const;
  Seconds EarliestStart(const State& state, int task,
                        const WindowInfo& info) const;

  const Scenario* scenario_;
  std::vector<TaskInfo> tasks_;
  std::vector<int> lane_offset_;  // first lane of each satellite
  std::vector<std::vector<double>> volume_;  // [satellite][task]
  // [satellite][from * n + to]; -1 marks a missing table entry.
  std::vector<std::vector<Seconds>> transition_;
};

}  // namespace satsched::edssp

#endif  // SATSCHED_EDSSP_H_
