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

#include "satsched/scenario.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string_view>
#include <tuple>

namespace satsched {

namespace {

constexpr std::pair<ConstraintId, const char*> kConstraintNames[] = {
    {ConstraintId::kScenario, "SCENARIO"},
    {ConstraintId::kC1Est, "C1_EST"},
    {ConstraintId::kC2Let, "C2_LET"},
    {ConstraintId::kC3Angle, "C3_ANGLE"},
    {ConstraintId::kC4Evt, "C4_EVT"},
    {ConstraintId::kC5Lvt, "C5_LVT"},
    {ConstraintId::kC6Storage, "C6_STORAGE"},
    {ConstraintId::kC7Transition, "C7_TRANSITION"},
    {ConstraintId::kC8Once, "C8_ONCE"},
    {ConstraintId::kC9Domain, "C9_DOMAIN"},
    {ConstraintId::kM1Est, "M1_EST"},
    {ConstraintId::kM2Let, "M2_LET"},
    {ConstraintId::kM3SubEst, "M3_SUB_EST"},
    {ConstraintId::kM4SubLet, "M4_SUB_LET"},
    {ConstraintId::kM5Evt, "M5_EVT"},
    {ConstraintId::kM6Lvt, "M6_LVT"},
    {ConstraintId::kM7SubEvt, "M7_SUB_EVT"},
    {ConstraintId::kM8SubLvt, "M8_SUB_LVT"},
    {ConstraintId::kM9Duration, "M9_DURATION"},
    {ConstraintId::kM10SplitSum, "M10_SPLIT_SUM"},
    {ConstraintId::kM11Gap, "M11_GAP"},
    {ConstraintId::kM12SubGap, "M12_SUB_GAP"},
    {ConstraintId::kM13MixedGap, "M13_MIXED_GAP"},
    {ConstraintId::kM14Once, "M14_ONCE"},
    {ConstraintId::kM15SubOnce, "M15_SUB_ONCE"},
    {ConstraintId::kMDomain, "M_DOMAIN"},
};

class Collector {
 public:
  void Add(std::string entity, std::string message) {
    out_.push_back(
        {ConstraintId::kScenario, {std::move(entity)}, std::move(message)});
  }
  std::vector<Violation> Take() { return std::move(out_); }

 private:
  std::vector<Violation> out_;
};

void ValidateTable(const TransitionTable& table, std::string_view name,
                   const std::string& satellite, Collector& issues) {
  for (const auto& [key, seconds] : table.entries()) {
    if (seconds < 0) {
      issues.Add("satellite " + satellite,
                 std::string(name) + " transition must be >= 0");
    }
    if (key.first == key.second && seconds != 0) {
      issues.Add("satellite " + satellite,
                 std::string(name) + " identical-value transition must be 0");
    }
  }
}

void ValidateSatellites(const Scenario& scenario, Collector& issues) {
  std::set<std::string> seen;
  for (const Satellite& sat : scenario.satellites) {
    const std::string entity = "satellite " + sat.id;
    if (!seen.insert(sat.id).second) issues.Add(entity, "duplicate id");
    if (!(sat.antenna_diameter_m > 0)) {
      issues.Add(entity, "antenna_diameter_m > 0");
    }
    if (!(sat.antenna_efficiency > 0 && sat.antenna_efficiency <= 1)) {
      issues.Add(entity, "antenna_efficiency in (0,1]");
    }
    if (!(sat.unit_data_rate >= 0)) issues.Add(entity, "unit_data_rate >= 0");
    if (!(sat.storage_capacity >= 0)) {
      issues.Add(entity, "storage_capacity >= 0");
    }
    if (sat.poweron_time_s < 0) issues.Add(entity, "poweron_time_s >= 0");
    if (sat.orbit_count < 1) issues.Add(entity, "orbit_count >= 1");
    ValidateTable(sat.transition_tables.polarization, "polarization", sat.id,
                  issues);
    ValidateTable(sat.transition_tables.mode, "mode", sat.id, issues);
    ValidateTable(sat.transition_tables.bandwidth, "bandwidth", sat.id, issues);
    ValidateTable(sat.transition_tables.frequency, "frequency", sat.id, issues);
  }
}

bool WithinHorizon(const Horizon& h, Seconds t) {
  return t >= h.start_s && t <= h.end_s;
}

void ValidateEdsspTasks(const Scenario& scenario, Collector& issues) {
  for (const EdsspTask& task : scenario.edssp_tasks) {
    const std::string entity = "task " + task.id;
    if (task.duration_s <= 0) issues.Add(entity, "duration_s > 0");
    if (task.est_s + task.duration_s > task.let_s) {
      issues.Add(entity, "est+dur<=let");
    }
    if (!(task.max_angle_rad > 0 && task.max_angle_rad < std::numbers::pi / 2)) {
      issues.Add(entity, "max_angle_rad in (0,pi/2)");
    }
    if (task.degree < 1 || task.degree > 100) {
      issues.Add(entity, "degree range");
    }
    if (!(task.wavelength_m > 0)) issues.Add(entity, "wavelength_m > 0");
    if (!WithinHorizon(scenario.horizon, task.est_s) ||
        !WithinHorizon(scenario.horizon, task.let_s)) {
      issues.Add(entity, "within horizon");
    }
  }
  const auto& levels = scenario.bandwidth_levels;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] > 0)) {
      issues.Add("bandwidth_levels", "levels must be positive");
      break;
    }
    if (i > 0 && !(levels[i - 1] > levels[i])) {
      issues.Add("bandwidth_levels", "levels strictly decreasing");
      break;
    }
  }
}

void ValidateObsTasks(const Scenario& scenario, Collector& issues) {
  for (const ObsTask& task : scenario.obs_tasks) {
    const std::string entity = "task " + task.id;
    if (task.duration_s <= 0) issues.Add(entity, "duration_s > 0");
    if (!(task.profit >= 0)) issues.Add(entity, "profit >= 0");
    if (task.est_s + (task.separable ? 0 : task.duration_s) > task.let_s) {
      issues.Add(entity, "est+dur<=let");
    }
    if (!WithinHorizon(scenario.horizon, task.est_s) ||
        !WithinHorizon(scenario.horizon, task.let_s)) {
      issues.Add(entity, "within horizon");
    }
  }
  if (scenario.min_interval_s < 0) {
    issues.Add("min_interval_s", "min_interval_s >= 0");
  }
}

void ValidateWindows(const Scenario& scenario, Collector& issues) {
  std::map<std::string, int> orbit_counts;
  for (const Satellite& sat : scenario.satellites) {
    orbit_counts.emplace(sat.id, sat.orbit_count);
  }
  std::set<std::string> task_ids;
  for (std::size_t i = 0; i < scenario.task_count(); ++i) {
    task_ids.insert(scenario.task_id(i));
  }
  std::set<std::tuple<std::string, std::string, int, int>> keys;
  const bool edssp = scenario.kind == ProblemKind::kEdssp;
  // MSJOPP assignments name a window without its orbit.
  std::set<std::tuple<std::string, std::string, int>> flat_keys;
  for (const VisibleWindow& w : scenario.windows) {
    const std::string entity = "window " + w.satellite_id + "/" + w.task_id +
                               "/" + std::to_string(w.orbit_index) + "/" +
                               std::to_string(w.window_index);
    auto sat = orbit_counts.find(w.satellite_id);
    if (sat == orbit_counts.end()) {
      issues.Add(entity, "unknown satellite");
    } else if (w.orbit_index < 0 || w.orbit_index >= sat->second) {
      issues.Add(entity, "orbit_index range");
    }
    if (!task_ids.contains(w.task_id)) issues.Add(entity, "unknown task");
    if (!keys.insert({w.satellite_id, w.task_id, w.orbit_index, w.window_index})
             .second) {
      issues.Add(entity, "duplicate window key");
    } else if (!edssp &&
               !flat_keys.insert({w.satellite_id, w.task_id, w.window_index})
                    .second) {
      issues.Add(entity, "duplicate window key");
    }
    if (w.evt_s >= w.lvt_s) issues.Add(entity, "evt<lvt");
    if (!WithinHorizon(scenario.horizon, w.evt_s) ||
        !WithinHorizon(scenario.horizon, w.lvt_s)) {
      issues.Add(entity, "within horizon");
    }
    const auto& profile = w.angle_profile;
    if (edssp && profile.empty()) {
      issues.Add(entity, "angle profile required");
    }
    if (!profile.empty()) {
      if (profile.front().time_s != w.evt_s ||
          profile.back().time_s != w.lvt_s) {
        issues.Add(entity, "profile spans [evt,lvt]");
      }
      for (std::size_t i = 0; i < profile.size(); ++i) {
        if (i > 0 && profile[i].time_s <= profile[i - 1].time_s) {
          issues.Add(entity, "profile times strictly increasing");
          break;
        }
      }
      for (const AngleSample& s : profile) {
        if (!(s.angle_rad >= 0)) {
          issues.Add(entity, "angles >= 0");
          break;
        }
      }
    }
  }
}

}  // namespace

const char* ProblemKindName(ProblemKind kind) {
  return kind == ProblemKind::kEdssp ? "edssp" : "msjopp";
}

Seconds TransitionTable::Lookup(int from, int to) const {
  if (from == to) return 0;
  auto it = entries_.find({from, to});
  if (it == entries_.end()) {
    throw InputError("unknown parameter transition " + std::to_string(from) +
                     "->" + std::to_string(to));
  }
  return it->second;
}

const char* ConstraintIdName(ConstraintId id) {
  for (const auto& [value, name] : kConstraintNames) {
    if (value == id) return name;
  }
  return "UNKNOWN";
}

ConstraintId ConstraintIdFromName(const std::string& name) {
  for (const auto& [value, text] : kConstraintNames) {
    if (name == text) return value;
  }
  throw InputError("unknown constraint id: " + name);
}

std::string Violation::ToLine() const {
  std::string joined;
  for (const std::string& e : entities) {
    if (!joined.empty()) joined += ',';
    for (char c : e) joined += (c == ' ' ? ':' : c);
  }
  if (joined.empty()) joined = "-";
  return std::string(ConstraintIdName(constraint_id)) + " " + joined + " " +
         message;
}

bool HasViolation(const std::vector<Violation>& violations, ConstraintId id) {
  return std::any_of(violations.begin(), violations.end(),
                     [id](const Violation& v) { return v.constraint_id == id; });
}

std::vector<Violation> ValidateScenario(const Scenario& scenario) {
  Collector issues;
  if (scenario.horizon.start_s > scenario.horizon.end_s) {
    issues.Add("horizon", "start<=end");
  }
  ValidateSatellites(scenario, issues);
  if (scenario.kind == ProblemKind::kEdssp) {
    if (!scenario.obs_tasks.empty()) {
      issues.Add("tasks", "EDSSP scenario holds observation tasks");
    }
    ValidateEdsspTasks(scenario, issues);
  } else {
    if (!scenario.edssp_tasks.empty()) {
      issues.Add("tasks", "MSJOPP scenario holds detection tasks");
    }
    ValidateObsTasks(scenario, issues);
  }
  std::set<std::string> task_ids;
  for (std::size_t i = 0; i < scenario.task_count(); ++i) {
    if (!task_ids.insert(scenario.task_id(i)).second) {
      issues.Add("task " + scenario.task_id(i), "duplicate id");
    }
  }
  ValidateWindows(scenario, issues);
  return issues.Take();
}

double AngleAt(const VisibleWindow& window, double t) {
  const auto& profile = window.angle_profile;
  if (profile.empty()) throw InputError("empty angle profile");
  if (t < static_cast<double>(window.evt_s) ||
      t > static_cast<double>(window.lvt_s)) {
    throw InputError("time outside window");
  }
  auto upper = std::lower_bound(
      profile.begin(), profile.end(), t, [](const AngleSample& s, double value) {
        return static_cast<double>(s.time_s) < value;
      });
  if (upper == profile.end()) return profile.back().angle_rad;
  if (static_cast<double>(upper->time_s) == t || upper == profile.begin()) {
    return upper->angle_rad;
  }
  const AngleSample& lo = *(upper - 1);
  const double span = static_cast<double>(upper->time_s - lo.time_s);
  const double frac = (t - static_cast<double>(lo.time_s)) / span;
  return lo.angle_rad + frac * (upper->angle_rad - lo.angle_rad);
}

}  // namespace satsched
