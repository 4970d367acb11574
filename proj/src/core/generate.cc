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

#include "satsched/generate.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace satsched {

namespace {

using Rng = std::mt19937_64;

constexpr int kFrequencies = 3;
constexpr int kPolarizations = 2;
constexpr int kModes = 3;
constexpr int kBandwidthLevels = 4;
constexpr double kReferenceDiameter = 4.0;

Seconds UniformInt(Rng& rng, Seconds lo, Seconds hi) {
  return std::uniform_int_distribution<Seconds>(lo, hi)(rng);
}

double Uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

TransitionTable RandomTable(Rng& rng, int values) {
  TransitionTable table;
  for (int a = 0; a < values; ++a) {
    for (int b = 0; b < values; ++b) {
      table.Set(a, b, a == b ? 0 : UniformInt(rng, 2, 30));
    }
  }
  return table;
}

void CheckParams(ProblemKind kind, const GenerateParams& p) {
  if (p.n_satellites < 1 || p.n_tasks < 1 || p.n_windows_per_task < 1) {
    throw InputError("satellite, task and window counts must be >= 1");
  }
  if (p.min_duration_s < 1 || p.max_duration_s < p.min_duration_s) {
    throw InputError("need 1 <= min_duration_s <= max_duration_s");
  }
  if (kind == ProblemKind::kEdssp) {
    if (p.orbits_per_satellite < 1) {
      throw InputError("orbits_per_satellite must be >= 1");
    }
    if (p.horizon_s / p.orbits_per_satellite < 3 * p.max_duration_s + 2) {
      throw InputError(
          "horizon too short: each orbit must hold 3x the max task duration");
    }
  } else {
    if (!(p.separable_fraction >= 0 && p.separable_fraction <= 1)) {
      throw InputError("separable_fraction must be in [0,1]");
    }
    if (p.horizon_s < 4 * p.max_duration_s + 40) {
      throw InputError("horizon too short for the max task duration");
    }
  }
}

// V-shaped profile with its minimum `floor` at the window centre and slope
// `slope` (rad/s) towards both edges.
std::vector<AngleSample> VProfile(Seconds evt, Seconds lvt, double floor,
                                  double slope) {
  const Seconds centre = evt + (lvt - evt) / 2;
  return {{evt, floor + slope * static_cast<double>(centre - evt)},
          {centre, floor},
          {lvt, floor + slope * static_cast<double>(lvt - centre)}};
}

Scenario GenerateEdssp(const GenerateParams& p) {
  Rng rng(p.seed);
  Scenario s;
  s.kind = ProblemKind::kEdssp;
  s.horizon = {0, p.horizon_s};
  s.bandwidth_levels = {40.0, 20.0, 10.0, 5.0};
  const Seconds segment = p.horizon_s / p.orbits_per_satellite;

  for (int i = 0; i < p.n_satellites; ++i) {
    Satellite sat;
    sat.id = "sat-" + std::to_string(i);
    sat.antenna_diameter_m = Uniform(rng, 3.0, 5.0);
    sat.antenna_efficiency = Uniform(rng, 0.55, 0.75);
    sat.unit_data_rate = Uniform(rng, 0.5, 1.5);
    sat.poweron_time_s = UniformInt(rng, 1, 5);
    sat.orbit_count = p.orbits_per_satellite;
    sat.transition_tables.frequency = RandomTable(rng, kFrequencies);
    sat.transition_tables.polarization = RandomTable(rng, kPolarizations);
    sat.transition_tables.mode = RandomTable(rng, kModes);
    TransitionTable band;
    for (int a = 1; a <= kBandwidthLevels; ++a) {
      for (int b = 1; b <= kBandwidthLevels; ++b) {
        band.Set(a, b, a == b ? 0 : UniformInt(rng, 2, 30));
      }
    }
    sat.transition_tables.bandwidth = std::move(band);
    s.satellites.push_back(std::move(sat));
  }

  for (int j = 0; j < p.n_tasks; ++j) {
    EdsspTask task;
    task.id = "task-" + std::to_string(j);
    task.duration_s = UniformInt(rng, p.min_duration_s, p.max_duration_s);
    task.degree = static_cast<int>(UniformInt(rng, 1, 100));
    task.wavelength_m = Uniform(rng, 0.03, 0.3);
    task.frequency = static_cast<int>(UniformInt(rng, 0, kFrequencies - 1));
    task.polarization =
        static_cast<int>(UniformInt(rng, 0, kPolarizations - 1));
    task.mode = static_cast<int>(UniformInt(rng, 0, kModes - 1));
    const double beam =
        70.0 * task.wavelength_m / kReferenceDiameter * std::numbers::pi / 180;
    task.max_angle_rad = std::min(beam * Uniform(rng, 1.0, 3.0), 1.5);

    const Seconds dur = task.duration_s;
    for (int k = 0; k < p.n_windows_per_task; ++k) {
      VisibleWindow w;
      const int sat = static_cast<int>(UniformInt(rng, 0, p.n_satellites - 1));
      w.satellite_id = s.satellites[sat].id;
      w.task_id = task.id;
      w.orbit_index =
          static_cast<int>(UniformInt(rng, 0, p.orbits_per_satellite - 1));
      w.window_index = k;
      const Seconds length = std::clamp<Seconds>(
          std::llround(static_cast<double>(dur) * Uniform(rng, 1.0, 3.0)),
          dur + 2, segment);
      const Seconds seg_start = segment * w.orbit_index;
      w.evt_s = seg_start + UniformInt(rng, 0, segment - length);
      w.lvt_s = w.evt_s + length;
      const double floor = Uniform(rng, 0.0, 0.8 * task.max_angle_rad);
      // The first window keeps the centred interval under the max angle.
      const double spread = k == 0 ? Uniform(rng, 0.5, 1.0)
                                   : Uniform(rng, 0.25, 1.5);
      const double slope = 2.0 * (task.max_angle_rad - floor) * spread /
                           static_cast<double>(dur + 2);
      w.angle_profile = VProfile(w.evt_s, w.lvt_s, floor, slope);
      s.windows.push_back(std::move(w));
    }
    const VisibleWindow& first = s.windows[s.windows.size() -
                                           p.n_windows_per_task];
    task.est_s = UniformInt(rng, 0, first.evt_s);
    task.let_s = UniformInt(rng, first.lvt_s, p.horizon_s);
    s.edssp_tasks.push_back(std::move(task));
  }

  // Storage holds every single task and, on average, a fraction of the load
  // spread over the satellite's orbits.
  for (Satellite& sat : s.satellites) {
    double largest = 0.0;
    double total = 0.0;
    for (const EdsspTask& task : s.edssp_tasks) {
      const double volume = sat.unit_data_rate *
                            s.bandwidth_levels[0] *
                            static_cast<double>(task.duration_s);
      largest = std::max(largest, volume);
      total += volume;
    }
    const double share = total / (p.n_satellites * p.orbits_per_satellite);
    sat.storage_capacity = std::max(largest, share * Uniform(rng, 0.5, 1.0));
  }
  return s;
}

Scenario GenerateMsjopp(const GenerateParams& p) {
  Rng rng(p.seed);
  Scenario s;
  s.kind = ProblemKind::kMsjopp;
  s.horizon = {0, p.horizon_s};
  s.min_interval_s = UniformInt(rng, 5, 20);
  for (int i = 0; i < p.n_satellites; ++i) {
    Satellite sat;
    sat.id = "sat-" + std::to_string(i);
    sat.orbit_count = 1;
    s.satellites.push_back(std::move(sat));
  }
  const Seconds gap = s.min_interval_s;

  for (int j = 0; j < p.n_tasks; ++j) {
    ObsTask task;
    task.id = "task-" + std::to_string(j);
    task.duration_s = UniformInt(rng, p.min_duration_s, p.max_duration_s);
    task.profit = static_cast<double>(UniformInt(rng, 1, 10));
    task.separable = Uniform(rng, 0.0, 1.0) < p.separable_fraction;
    const Seconds dur = task.duration_s;
    const std::size_t first = s.windows.size();
    int first_sat = 0;
    for (int k = 0; k < p.n_windows_per_task; ++k) {
      VisibleWindow w;
      int sat = static_cast<int>(UniformInt(rng, 0, p.n_satellites - 1));
      Seconds length;
      if (task.separable) {
        // Windows may be shorter than the task; any two of them cover it.
        const double lo = (k == 0 && p.n_windows_per_task == 1) ? 1.0 : 0.55;
        length = std::llround(static_cast<double>(dur) * Uniform(rng, lo, 1.5));
        length = std::max<Seconds>(
            length, static_cast<Seconds>(std::ceil(0.55 * dur)));
        if (lo == 1.0) length = std::max(length, dur);
      } else {
        length = std::llround(static_cast<double>(dur) * Uniform(rng, 1.0, 3.0));
        length = std::max(length, dur);
      }
      length = std::min(length, p.horizon_s / 2 - gap);
      w.evt_s = UniformInt(rng, 0, p.horizon_s - length);
      // Keep the first two windows of a separable task apart (different
      // satellites, or disjoint halves of the horizon) so both chunks fit.
      if (task.separable && p.n_windows_per_task > 1 && k < 2) {
        if (k == 0) {
          first_sat = sat;
        } else if (p.n_satellites > 1) {
          sat = static_cast<int>(UniformInt(rng, 0, p.n_satellites - 2));
          if (sat >= first_sat) ++sat;
        }
        if (p.n_satellites == 1) {
          const Seconds half = p.horizon_s / 2;
          w.evt_s = k == 0 ? UniformInt(rng, 0, half - gap - length)
                           : UniformInt(rng, half, p.horizon_s - length);
        }
      }
      w.satellite_id = s.satellites[sat].id;
      w.task_id = task.id;
      w.orbit_index = 0;
      w.window_index = k;
      w.lvt_s = w.evt_s + length;
      s.windows.push_back(std::move(w));
    }
    Seconds lo = s.windows[first].evt_s;
    Seconds hi = s.windows[first].lvt_s;
    if (task.separable) {
      for (std::size_t i = first; i < s.windows.size(); ++i) {
        lo = std::min(lo, s.windows[i].evt_s);
        hi = std::max(hi, s.windows[i].lvt_s);
      }
    }
    task.est_s = UniformInt(rng, 0, lo);
    task.let_s = UniformInt(rng, hi, p.horizon_s);
    s.obs_tasks.push_back(std::move(task));
  }
  return s;
}

}  // namespace

Scenario GenerateScenario(ProblemKind kind, const GenerateParams& params) {
  CheckParams(kind, params);
  return kind == ProblemKind::kEdssp ? GenerateEdssp(params)
                                     : GenerateMsjopp(params);
}

}  // namespace satsched
