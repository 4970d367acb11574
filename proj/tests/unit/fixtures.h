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

#ifndef SATSCHED_TESTS_UNIT_FIXTURES_H_
#define SATSCHED_TESTS_UNIT_FIXTURES_H_

#include <string>
#include <vector>

#include "satsched/scenario.h"

namespace satsched::testing {

// Hand-built instances for the unit tests.

inline Satellite MakeSatellite(const std::string& id, int orbits = 1) {
  Satellite s;
  s.id = id;
  s.antenna_diameter_m = 1.0;
  s.antenna_efficiency = 1.0;
  s.unit_data_rate = 1.0;
  s.storage_capacity = 1e9;
  s.poweron_time_s = 0;
  s.orbit_count = orbits;
  return s;
}

inline EdsspTask MakeEdsspTask(const std::string& id, Seconds est, Seconds let,
                               Seconds dur, int degree = 80) {
  EdsspTask t;
  t.id = id;
  t.est_s = est;
  t.let_s = let;
  t.duration_s = dur;
  t.max_angle_rad = 0.5;
  t.degree = degree;
  t.wavelength_m = 0.1;
  return t;
}

inline VisibleWindow MakeWindow(const std::string& sat, const std::string& task,
                                Seconds evt, Seconds lvt, int orbit = 0,
                                int index = 0, double angle = 0.0) {
  VisibleWindow w;
  w.satellite_id = sat;
  w.task_id = task;
  w.orbit_index = orbit;
  w.window_index = index;
  w.evt_s = evt;
  w.lvt_s = lvt;
  w.angle_profile = {{evt, angle}, {lvt, angle}};
  return w;
}

inline Scenario EmptyEdssp(Seconds horizon = 1000) {
  Scenario s;
  s.kind = ProblemKind::kEdssp;
  s.horizon = {0, horizon};
  s.bandwidth_levels = {8.0, 4.0, 2.0, 1.0};
  return s;
}

inline ObsTask MakeObsTask(const std::string& id, Seconds est, Seconds let,
                           Seconds dur, double profit, bool separable = false) {
  ObsTask t;
  t.id = id;
  t.est_s = est;
  t.let_s = let;
  t.duration_s = dur;
  t.profit = profit;
  t.separable = separable;
  return t;
}

inline VisibleWindow MakeObsWindow(const std::string& sat,
                                   const std::string& task, Seconds evt,
                                   Seconds lvt, int index = 0) {
  VisibleWindow w;
  w.satellite_id = sat;
  w.task_id = task;
  w.window_index = index;
  w.evt_s = evt;
  w.lvt_s = lvt;
  return w;
}

inline Scenario EmptyMsjopp(Seconds horizon = 1000, Seconds gap = 5) {
  Scenario s;
  s.kind = ProblemKind::kMsjopp;
  s.horizon = {0, horizon};
  s.min_interval_s = gap;
  return s;
}

}  // namespace satsched::testing

#endif  // SATSCHED_TESTS_UNIT_FIXTURES_H_
