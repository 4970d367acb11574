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

#include "satsched/edssp.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <tuple>

namespace satsched::edssp {

namespace {

// Below this argument the ascending series is summed directly; the largest
// term stays under ~1e7 so extended precision keeps ~1e-12 absolute error.
constexpr double kSeriesLimit = 20.0;
constexpr double kBeamConstant = 2.07123;
constexpr double kStorageTolerance = 1e-9;

long double SeriesOverPower(int order, long double u) {
  long double term = 1.0L;
  for (int k = 1; k <= order; ++k) term /= 2.0L * k;
  const long double x = -u * u / 4.0L;
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= x / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (k > u / 2 && std::fabs(term) <= 1e-22L * std::fabs(sum)) break;
  }
  return sum;
}

// Miller's algorithm: recur downward from an order far above u, then
// normalize with J0 + 2 * sum(J_2k) = 1.
long double BackwardRecurrence(int order, long double u) {
  int top = static_cast<int>(u + 40.0L + 10.0L * std::cbrt(u));
  top += top % 2;
  long double next = 0.0L;  // J_{k+1}
  long double cur = 1e-30L;  // J_k
  long double norm = 0.0L;
  long double result = 0.0L;
  for (int k = top; k >= 1; --k) {
    const long double prev = 2.0L * k / u * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    if ((k - 1) == order) result = cur;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0L * cur;
    if (std::fabs(cur) > 1e250L) {
      cur *= 1e-250L;
      next *= 1e-250L;
      norm *= 1e-250L;
      result *= 1e-250L;
    }
  }
  norm += cur;  // J_0
  return result / norm;
}

void CheckOrder(int order) {
  if (order != 1 && order != 3) {
    throw InputError("unsupported Bessel order " + std::to_string(order));
  }
}

struct WindowKey {
  std::string satellite;
  std::string task;
  int orbit;
  int window;
  auto operator<=>(const WindowKey&) const = default;
};

double AssignmentProfit(const Satellite& sat, const EdsspTask& task,
                        const VisibleWindow& window, Seconds start,
                        const std::array<double, 4>& levels) {
  const double angle = MinAngleOver(window, start, start + task.duration_s);
  const double gain =
      SignalGain(angle, Theta3db(task, sat), PeakGain(sat, task));
  return gain *
         BandwidthGain(BandwidthForDegree(task.degree, levels), levels);
}

}  // namespace

double BesselJOverPower(int order, double u) {
  CheckOrder(order);
  if (!(u >= 0)) throw InputError("Bessel argument must be >= 0");
  if (u <= kSeriesLimit) {
    return static_cast<double>(SeriesOverPower(order, u));
  }
  return static_cast<double>(BackwardRecurrence(order, u) /
                             std::pow(static_cast<long double>(u), order));
}

double BesselJ(int order, double u) {
  CheckOrder(order);
  if (!(u >= 0)) throw InputError("Bessel argument must be >= 0");
  if (u <= kSeriesLimit) {
    return static_cast<double>(SeriesOverPower(order, u) *
                               std::pow(static_cast<long double>(u), order));
  }
  return static_cast<double>(BackwardRecurrence(order, u));
}

double PeakGain(const Satellite& sat, const EdsspTask& task) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double d = sat.antenna_diameter_m;
  return sat.antenna_efficiency * pi2 * d * d /
         (task.wavelength_m * task.wavelength_m);
}

double Theta3db(const EdsspTask& task, const Satellite& sat) {
  const double degrees = 70.0 * task.wavelength_m / sat.antenna_diameter_m;
  return degrees * std::numbers::pi / 180.0;
}

double SignalGain(double theta, double theta3db, double g0) {
  const double u = kBeamConstant * std::sin(theta) / std::sin(theta3db);
  const double bracket =
      0.5 * BesselJOverPower(1, std::fabs(u)) +
      36.0 * BesselJOverPower(3, std::fabs(u));
  return g0 * bracket * bracket;
}

int BandwidthLevel(int degree) {
  if (degree < 1 || degree > 100) {
    throw InputError("degree out of range [1,100]: " + std::to_string(degree));
  }
  if (degree > 75) return 1;
  if (degree > 50) return 2;
  if (degree > 25) return 3;
  return 4;
}

double BandwidthForDegree(int degree, const std::array<double, 4>& levels) {
  return levels[BandwidthLevel(degree) - 1];
}

double BandwidthGain(double bandwidth, const std::array<double, 4>& levels) {
  if (std::find(levels.begin(), levels.end(), bandwidth) == levels.end()) {
    throw InputError("bandwidth is not one of the configured levels");
  }
  return bandwidth / levels[0];
}

double DataVolume(const Satellite& sat, const EdsspTask& task,
                  const std::array<double, 4>& levels) {
  return sat.unit_data_rate * BandwidthForDegree(task.degree, levels) *
         static_cast<double>(task.duration_s);
}

Seconds TransitionTime(const Satellite& sat, const EdsspTask& from,
                       const EdsspTask& to) {
  const TransitionTables& t = sat.transition_tables;
  return std::max({t.frequency.Lookup(from.frequency, to.frequency),
                   t.bandwidth.Lookup(BandwidthLevel(from.degree),
                                      BandwidthLevel(to.degree)),
                   t.polarization.Lookup(from.polarization, to.polarization),
                   t.mode.Lookup(from.mode, to.mode), sat.poweron_time_s,
                   Seconds{0}});
}

double MinAngleOver(const VisibleWindow& window, Seconds from, Seconds to) {
  from = std::clamp(from, window.evt_s, window.lvt_s);
  to = std::clamp(to, from, window.lvt_s);
  double best = std::min(AngleAt(window, static_cast<double>(from)),
                         AngleAt(window, static_cast<double>(to)));
  for (const AngleSample& s : window.angle_profile) {
    if (s.time_s > from && s.time_s < to) best = std::min(best, s.angle_rad);
  }
  return best;
}

std::vector<Violation> CheckSchedule(const Scenario& scenario,
                                     const Schedule& schedule) {
  std::map<std::string, int> sat_index;
  for (std::size_t i = 0; i < scenario.satellites.size(); ++i) {
    sat_index.emplace(scenario.satellites[i].id, static_cast<int>(i));
  }
  std::map<std::string, int> task_index;
  for (std::size_t i = 0; i < scenario.edssp_tasks.size(); ++i) {
    task_index.emplace(scenario.edssp_tasks[i].id, static_cast<int>(i));
  }
  std::map<WindowKey, int> window_index;
  for (std::size_t i = 0; i < scenario.windows.size(); ++i) {
    const VisibleWindow& w = scenario.windows[i];
    window_index.emplace(
        WindowKey{w.satellite_id, w.task_id, w.orbit_index, w.window_index},
        static_cast<int>(i));
  }

  struct Resolved {
    int assignment;
    int sat;
    int task;
    int window;
    Seconds start;
    Seconds end;
  };
  std::vector<Violation> out;
  std::vector<Resolved> resolved;
  std::map<std::string, int> task_uses;
  const auto task_entity = [](const std::string& id) { return "task " + id; };

  for (std::size_t i = 0; i < schedule.assignments.size(); ++i) {
    const Assignment& a = schedule.assignments[i];
    ++task_uses[a.task_id];
    auto s = sat_index.find(a.satellite_id);
    auto t = task_index.find(a.task_id);
    auto w = window_index.find(
        WindowKey{a.satellite_id, a.task_id, a.orbit_index, a.window_index});
    if (s == sat_index.end() || t == task_index.end() ||
        w == window_index.end()) {
      out.push_back({ConstraintId::kC9Domain,
                     {"assignment " + std::to_string(i), task_entity(a.task_id)},
                     "no window matches (satellite, task, orbit, window)"});
      continue;
    }
    if (a.start_s < 0) {
      out.push_back({ConstraintId::kC9Domain, {task_entity(a.task_id)},
                     "start_s must be >= 0"});
    }
    const EdsspTask& task = scenario.edssp_tasks[t->second];
    const VisibleWindow& win = scenario.windows[w->second];
    const Seconds start = a.start_s;
    const Seconds end = start + task.duration_s;
    const std::vector<std::string> who = {task_entity(task.id)};
    if (start < task.est_s) {
      out.push_back({ConstraintId::kC1Est, who, "start before est"});
    }
    if (end > task.let_s) {
      out.push_back({ConstraintId::kC2Let, who, "end after let"});
    }
    for (Seconds sec = std::max(start, win.evt_s);
         sec <= std::min(end, win.lvt_s); ++sec) {
      if (AngleAt(win, static_cast<double>(sec)) > task.max_angle_rad) {
        out.push_back({ConstraintId::kC3Angle, who,
                       "angle exceeds max at t=" + std::to_string(sec)});
        break;
      }
    }
    if (start < win.evt_s) {
      out.push_back({ConstraintId::kC4Evt, who, "start before evt"});
    }
    if (end > win.lvt_s) {
      out.push_back({ConstraintId::kC5Lvt, who, "end after lvt"});
    }
    resolved.push_back({static_cast<int>(i), s->second, t->second, w->second,
                        start, end});
  }

  for (const auto& [id, uses] : task_uses) {
    if (uses > 1) {
      out.push_back({ConstraintId::kC8Once, {task_entity(id)},
                     "scheduled " + std::to_string(uses) + " times"});
    }
  }

  std::map<std::pair<int, int>, std::vector<Resolved>> lanes;
  for (const Resolved& r : resolved) {
    lanes[{r.sat, scenario.windows[r.window].orbit_index}].push_back(r);
  }
  for (auto& [key, items] : lanes) {
    const Satellite& sat = scenario.satellites[key.first];
    const std::string lane = "satellite " + sat.id + " orbit " +
                             std::to_string(key.second);
    double volume = 0.0;
    for (const Resolved& r : items) {
      volume += DataVolume(sat, scenario.edssp_tasks[r.task],
                           scenario.bandwidth_levels);
    }
    if (volume > sat.storage_capacity * (1 + kStorageTolerance) +
                     kStorageTolerance) {
      out.push_back({ConstraintId::kC6Storage, {lane},
                     "data volume exceeds storage capacity"});
    }
    std::sort(items.begin(), items.end(),
              [](const Resolved& a, const Resolved& b) {
                return std::tie(a.start, a.end, a.assignment) <
                       std::tie(b.start, b.end, b.assignment);
              });
    for (std::size_t k = 1; k < items.size(); ++k) {
      const EdsspTask& prev = scenario.edssp_tasks[items[k - 1].task];
      const EdsspTask& next = scenario.edssp_tasks[items[k].task];
      const Seconds gap = TransitionTime(sat, prev, next);
      if (items[k - 1].end + gap > items[k].start) {
        out.push_back({ConstraintId::kC7Transition,
                       {task_entity(prev.id), task_entity(next.id)},
                       "gap shorter than transition time " +
                           std::to_string(gap) + "s"});
      }
    }
  }
  return out;
}

double ObjectiveValue(const Scenario& scenario, const Schedule& schedule) {
  std::map<std::string, int> sat_index;
  for (std::size_t i = 0; i < scenario.satellites.size(); ++i) {
    sat_index.emplace(scenario.satellites[i].id, static_cast<int>(i));
  }
  std::map<std::string, int> task_index;
  for (std::size_t i = 0; i < scenario.edssp_tasks.size(); ++i) {
    task_index.emplace(scenario.edssp_tasks[i].id, static_cast<int>(i));
  }
  std::map<WindowKey, int> window_index;
  for (std::size_t i = 0; i < scenario.windows.size(); ++i) {
    const VisibleWindow& w = scenario.windows[i];
    window_index.emplace(
        WindowKey{w.satellite_id, w.task_id, w.orbit_index, w.window_index},
        static_cast<int>(i));
  }
  struct Term {
    int task;
    Seconds start;
    int window;
    double value;
  };
  std::vector<Term> terms;
  for (const Assignment& a : schedule.assignments) {
    auto s = sat_index.find(a.satellite_id);
    auto t = task_index.find(a.task_id);
    auto w = window_index.find(
        WindowKey{a.satellite_id, a.task_id, a.orbit_index, a.window_index});
    if (s == sat_index.end() || t == task_index.end() ||
        w == window_index.end()) {
      continue;
    }
    terms.push_back({t->second, a.start_s, w->second,
                     AssignmentProfit(scenario.satellites[s->second],
                                      scenario.edssp_tasks[t->second],
                                      scenario.windows[w->second], a.start_s,
                                      scenario.bandwidth_levels)});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return std::tie(a.task, a.start, a.window) <
           std::tie(b.task, b.start, b.window);
  });
  double total = 0.0;
  for (const Term& term : terms) total += term.value;
  return total;
}

Decoder::Decoder(const Scenario& scenario) : scenario_(&scenario) {
  if (scenario.kind != ProblemKind::kEdssp) {
    throw InputError("EDSSP decoder needs an EDSSP scenario");
  }
  if (auto issues = ValidateScenario(scenario); !issues.empty()) {
    throw InputError("invalid scenario: " + issues.front().ToLine());
  }
  const int n_tasks = static_cast<int>(scenario.edssp_tasks.size());
  const int n_sats = static_cast<int>(scenario.satellites.size());
  std::map<std::string, int> sat_index;
  lane_offset_.resize(n_sats);
  int lanes = 0;
  for (int i = 0; i < n_sats; ++i) {
    sat_index.emplace(scenario.satellites[i].id, i);
    lane_offset_[i] = lanes;
    lanes += scenario.satellites[i].orbit_count;
  }
  lane_offset_.push_back(lanes);
  std::map<std::string, int> task_index;
  for (int i = 0; i < n_tasks; ++i) {
    task_index.emplace(scenario.edssp_tasks[i].id, i);
  }

  tasks_.resize(n_tasks);
  for (int i = 0; i < n_tasks; ++i) {
    const EdsspTask& task = scenario.edssp_tasks[i];
    tasks_[i].omega = BandwidthGain(
        BandwidthForDegree(task.degree, scenario.bandwidth_levels),
        scenario.bandwidth_levels);
    tasks_[i].profit_bound = 0.0;
  }
  for (std::size_t wi = 0; wi < scenario.windows.size(); ++wi) {
    const VisibleWindow& w = scenario.windows[wi];
    const int sat = sat_index.at(w.satellite_id);
    const int t = task_index.at(w.task_id);
    const EdsspTask& task = scenario.edssp_tasks[t];
    const Satellite& satellite = scenario.satellites[sat];
    WindowInfo info{static_cast<int>(wi), lane_offset_[sat] + w.orbit_index,
                    sat, PeakGain(satellite, task),
                    Theta3db(task, satellite), {}};
    for (Seconds s = w.evt_s; s <= w.lvt_s; ++s) {
      if (AngleAt(w, static_cast<double>(s)) > task.max_angle_rad) {
        info.bad_seconds.push_back(s);
      }
    }
    // The gain pattern never exceeds its boresight value.
    tasks_[t].profit_bound =
        std::max(tasks_[t].profit_bound, info.g0 * tasks_[t].omega);
    tasks_[t].windows.push_back(std::move(info));
  }
  for (TaskInfo& info : tasks_) {
    std::sort(info.windows.begin(), info.windows.end(),
              [&](const WindowInfo& a, const WindowInfo& b) {
                const VisibleWindow& wa = scenario.windows[a.window];
                const VisibleWindow& wb = scenario.windows[b.window];
                return std::tie(a.satellite, wa.orbit_index, wa.evt_s,
                                wa.window_index) <
                       std::tie(b.satellite, wb.orbit_index, wb.evt_s,
                                wb.window_index);
              });
  }

  volume_.assign(n_sats, std::vector<double>(n_tasks));
  transition_.assign(n_sats, std::vector<Seconds>(
                                 static_cast<std::size_t>(n_tasks) * n_tasks));
  for (int s = 0; s < n_sats; ++s) {
    const Satellite& sat = scenario.satellites[s];
    for (int a = 0; a < n_tasks; ++a) {
      const EdsspTask& from = scenario.edssp_tasks[a];
      volume_[s][a] = DataVolume(sat, from, scenario.bandwidth_levels);
      for (int b = 0; b < n_tasks; ++b) {
        Seconds value = -1;
        try {
          value = TransitionTime(sat, from, scenario.edssp_tasks[b]);
        } catch (const InputError&) {
        }
        transition_[s][static_cast<std::size_t>(a) * n_tasks + b] = value;
      }
    }
  }
}

Decoder::State Decoder::EmptyState() const {
  State state;
  state.lanes.resize(lane_offset_.back());
  state.storage_used.assign(lane_offset_.back(), 0.0);
  state.placed.assign(tasks_.size(), false);
  state.profit.assign(tasks_.size(), 0.0);
  return state;
}

double Decoder::Objective(const State& state) {
  double total = 0.0;
  for (double p : state.profit) total += p;
  return total;
}

Seconds Decoder::Transition(int satellite, int from, int to) const {
  const Seconds value =
      transition_[satellite][static_cast<std::size_t>(from) * tasks_.size() +
                             to];
  if (value < 0) {
    throw InputError("unknown parameter transition between tasks " +
                     scenario_->edssp_tasks[from].id + " and " +
                     scenario_->edssp_tasks[to].id);
  }
  return value;
}

Seconds Decoder::EarliestStart(const State& state, int task,
                               const WindowInfo& info) const {
  const EdsspTask& t = scenario_->edssp_tasks[task];
  const VisibleWindow& w = scenario_->windows[info.window];
  const Satellite& sat = scenario_->satellites[info.satellite];
  if (state.storage_used[info.lane] + volume_[info.satellite][task] >
      sat.storage_capacity) {
    return -1;
  }
  const Seconds lo = std::max(w.evt_s, t.est_s);
  const Seconds hi = std::min(w.lvt_s, t.let_s) - t.duration_s;
  if (lo > hi) return -1;
  const auto& lane = state.lanes[info.lane];
  // Each gap between consecutive placed tasks is a candidate slot.
  for (std::size_t slot = 0; slot <= lane.size(); ++slot) {
    Seconds from = lo;
    Seconds to = hi;
    if (slot > 0) {
      const State::Placed& prev = lane[slot - 1];
      from = std::max(from,
                      prev.end + Transition(info.satellite, prev.task, task));
    }
    if (slot < lane.size()) {
      const State::Placed& next = lane[slot];
      if (next.start - t.duration_s < from) continue;
      to = std::min(to, next.start -
                            Transition(info.satellite, task, next.task) -
                            t.duration_s);
    }
    Seconds start = from;
    while (start <= to) {
      auto bad = std::lower_bound(info.bad_seconds.begin(),
                                  info.bad_seconds.end(), start);
      if (bad == info.bad_seconds.end() || *bad > start + t.duration_s) {
        return start;
      }
      start = *bad + 1;
    }
  }
  return -1;
}

bool Decoder::TryPlace(State& state, int task) const {
  if (task < 0 || task >= task_count()) {
    throw InputError("task index out of range");
  }
  if (state.placed[task]) return false;
  const WindowInfo* chosen = nullptr;
  Seconds best = -1;
  for (const WindowInfo& info : tasks_[task].windows) {
    const Seconds start = EarliestStart(state, task, info);
    if (start >= 0 && (chosen == nullptr || start < best)) {
      chosen = &info;
      best = start;
    }
  }
  if (chosen == nullptr) return false;
  const EdsspTask& t = scenario_->edssp_tasks[task];
  const State::Placed placed{task, chosen->window, best, best + t.duration_s};
  auto& lane = state.lanes[chosen->lane];
  lane.insert(std::upper_bound(lane.begin(), lane.end(), placed,
                               [](const State::Placed& a,
                                  const State::Placed& b) {
                                 return a.start < b.start;
                               }),
              placed);
  state.storage_used[chosen->lane] += volume_[chosen->satellite][task];
  state.order.push_back(placed);
  state.placed[task] = true;
  const VisibleWindow& w = scenario_->windows[chosen->window];
  state.profit[task] =
      SignalGain(MinAngleOver(w, placed.start, placed.end), chosen->theta3db,
                 chosen->g0) *
      tasks_[task].omega;
  return true;
}

Schedule Decoder::Decode(std::span<const int> order) const {
  State state = EmptyState();
  for (int task : order) TryPlace(state, task);
  return ToSchedule(state);
}

double Decoder::Evaluate(std::span<const int> order) const {
  State state = EmptyState();
  for (int task : order) TryPlace(state, task);
  return Objective(state);
}

Schedule Decoder::ToSchedule(const State& state) const {
  Schedule schedule;
  schedule.assignments.reserve(state.order.size());
  for (const State::Placed& p : state.order) {
    const VisibleWindow& w = scenario_->windows[p.window];
    schedule.assignments.push_back(
        {w.satellite_id, w.task_id, w.orbit_index, w.window_index, p.start});
  }
  return schedule;
}

}  // namespace satsched::edssp
