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

#include "satsched/msjopp.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace satsched::msjopp {

namespace {

struct WindowKey {
  std::string satellite;
  std::string task;
  int window;
  auto operator<=>(const WindowKey&) const = default;
};

Seconds UsableLength(const ObsTask& task, const VisibleWindow& w) {
  return std::min(w.lvt_s, task.let_s) - std::max(w.evt_s, task.est_s);
}

std::string PieceLabel(const std::string& task_id,
                       const std::optional<int>& subtask) {
  std::string label = "task " + task_id;
  if (subtask) label += "#" + std::to_string(*subtask);
  return label;
}

}  // namespace

SplitPlan SplitTask(const ObsTask& task,
                    std::span<const VisibleWindow> windows) {
  if (!task.separable) {
    throw InputError("task " + task.id + " is not separable");
  }
  std::vector<Seconds> usable;
  for (const VisibleWindow& w : windows) {
    const Seconds length = UsableLength(task, w);
    if (length > 0) usable.push_back(length);
  }
  std::stable_sort(usable.begin(), usable.end(), std::greater<>());
  SplitPlan plan{task.id, {}};
  Seconds remaining = task.duration_s;
  for (Seconds length : usable) {
    if (remaining == 0) break;
    const Seconds chunk = std::min(remaining, length);
    plan.subtask_durations.push_back(chunk);
    remaining -= chunk;
  }
  if (remaining > 0) plan.subtask_durations.clear();
  return plan;
}

std::vector<Violation> CheckSchedule(const Scenario& scenario,
                                     const Schedule& schedule) {
  std::map<std::string, int> sat_index;
  for (std::size_t i = 0; i < scenario.satellites.size(); ++i) {
    sat_index.emplace(scenario.satellites[i].id, static_cast<int>(i));
  }
  std::map<std::string, int> task_index;
  for (std::size_t i = 0; i < scenario.obs_tasks.size(); ++i) {
    task_index.emplace(scenario.obs_tasks[i].id, static_cast<int>(i));
  }
  std::map<WindowKey, int> window_index;
  for (std::size_t i = 0; i < scenario.windows.size(); ++i) {
    const VisibleWindow& w = scenario.windows[i];
    window_index.emplace(WindowKey{w.satellite_id, w.task_id, w.window_index},
                         static_cast<int>(i));
  }

  std::vector<Violation> out;
  for (const auto& [id, plan] : schedule.split_plans) {
    auto t = task_index.find(id);
    if (t == task_index.end() || !scenario.obs_tasks[t->second].separable ||
        plan.parent_task_id != id) {
      out.push_back({ConstraintId::kMDomain, {"task " + id},
                     "split plan for an unknown or inseparable task"});
      continue;
    }
    const ObsTask& task = scenario.obs_tasks[t->second];
    if (std::any_of(plan.subtask_durations.begin(),
                    plan.subtask_durations.end(),
                    [](Seconds d) { return d <= 0; })) {
      out.push_back({ConstraintId::kMDomain, {"task " + id},
                     "sub-task durations must be > 0"});
    }
    const Seconds total = std::accumulate(plan.subtask_durations.begin(),
                                          plan.subtask_durations.end(),
                                          Seconds{0});
    if (total != task.duration_s) {
      out.push_back({ConstraintId::kM10SplitSum, {"task " + id},
                     "split plan sums to " + std::to_string(total) +
                         "s, required " + std::to_string(task.duration_s) +
                         "s"});
    }
  }

  struct Resolved {
    int assignment;
    int sat;
    int task;
    bool sub;
    Seconds start;
    Seconds end;
    std::string label;
  };
  std::vector<Resolved> resolved;
  std::map<std::string, int> task_uses;
  std::map<std::pair<std::string, int>, int> subtask_uses;

  for (std::size_t i = 0; i < schedule.assignments.size(); ++i) {
    const Assignment& a = schedule.assignments[i];
    const std::string label = PieceLabel(a.task_id, a.subtask_index);
    if (a.subtask_index) {
      ++subtask_uses[{a.task_id, *a.subtask_index}];
    } else {
      ++task_uses[a.task_id];
    }
    auto s = sat_index.find(a.satellite_id);
    auto t = task_index.find(a.task_id);
    auto w = window_index.find(
        WindowKey{a.satellite_id, a.task_id, a.window_index});
    const auto domain = [&](std::string message) {
      out.push_back({ConstraintId::kMDomain,
                     {"assignment " + std::to_string(i), label},
                     std::move(message)});
    };
    if (s == sat_index.end() || t == task_index.end() ||
        w == window_index.end()) {
      domain("no window matches (satellite, task, window)");
      continue;
    }
    const ObsTask& task = scenario.obs_tasks[t->second];
    if (a.observed_s <= 0) {
      domain("observed_s must be > 0");
      continue;
    }
    if (task.separable != a.subtask_index.has_value()) {
      domain("subtask_index must be set exactly for separable tasks");
      continue;
    }
    if (task.separable) {
      auto plan = schedule.split_plans.find(task.id);
      if (plan == schedule.split_plans.end() || *a.subtask_index < 0 ||
          *a.subtask_index >=
              static_cast<int>(plan->second.subtask_durations.size())) {
        domain("sub-task not part of the task's split plan");
        continue;
      }
    }
    const VisibleWindow& win = scenario.windows[w->second];
    const Seconds start = a.start_s;
    const Seconds end = start + a.observed_s;
    const bool sub = task.separable;
    const std::vector<std::string> who = {label};
    if (start < task.est_s) {
      out.push_back({sub ? ConstraintId::kM3SubEst : ConstraintId::kM1Est, who,
                     "start before est"});
    }
    if (end > task.let_s) {
      out.push_back({sub ? ConstraintId::kM4SubLet : ConstraintId::kM2Let, who,
                     "end after let"});
    }
    if (start < win.evt_s) {
      out.push_back({sub ? ConstraintId::kM7SubEvt : ConstraintId::kM5Evt, who,
                     "start before evt"});
    }
    if (end > win.lvt_s) {
      out.push_back({sub ? ConstraintId::kM8SubLvt : ConstraintId::kM6Lvt, who,
                     "end after lvt"});
    }
    if (!sub && a.observed_s != task.duration_s) {
      out.push_back({ConstraintId::kM9Duration, who,
                     "observed " + std::to_string(a.observed_s) +
                         "s, required " + std::to_string(task.duration_s) +
                         "s"});
    }
    resolved.push_back(
        {static_cast<int>(i), s->second, t->second, sub, start, end, label});
  }

  for (const auto& [id, uses] : task_uses) {
    if (uses > 1) {
      out.push_back({ConstraintId::kM14Once, {"task " + id},
                     "scheduled " + std::to_string(uses) + " times"});
    }
  }
  for (const auto& [key, uses] : subtask_uses) {
    if (uses > 1) {
      out.push_back({ConstraintId::kM15SubOnce,
                     {PieceLabel(key.first, key.second)},
                     "scheduled " + std::to_string(uses) + " times"});
    }
  }

  // Completed separable tasks must observe exactly their duration.
  std::map<int, std::map<int, Seconds>> observed;
  for (const Resolved& r : resolved) {
    if (!r.sub) continue;
    const Assignment& a = schedule.assignments[r.assignment];
    observed[r.task].emplace(*a.subtask_index, a.observed_s);
  }
  for (const auto& [task, pieces] : observed) {
    const ObsTask& t = scenario.obs_tasks[task];
    const SplitPlan& plan = schedule.split_plans.at(t.id);
    if (pieces.size() != plan.subtask_durations.size()) continue;
    Seconds total = 0;
    for (const auto& [index, seconds] : pieces) total += seconds;
    if (total != t.duration_s) {
      out.push_back({ConstraintId::kM10SplitSum, {"task " + t.id},
                     "sub-tasks observe " + std::to_string(total) +
                         "s, required " + std::to_string(t.duration_s) + "s"});
    }
  }

  // Pairwise minimum interval on each satellite.
  for (std::size_t i = 0; i < resolved.size(); ++i) {
    for (std::size_t j = i + 1; j < resolved.size(); ++j) {
      const Resolved* a = &resolved[i];
      const Resolved* b = &resolved[j];
      if (a->sat != b->sat) continue;
      if (std::tie(b->start, b->end) < std::tie(a->start, a->end)) {
        std::swap(a, b);
      }
      if (b->start - a->end >= scenario.min_interval_s) continue;
      ConstraintId id = ConstraintId::kM13MixedGap;
      if (!a->sub && !b->sub) id = ConstraintId::kM11Gap;
      if (a->sub && b->sub) id = ConstraintId::kM12SubGap;
      std::vector<std::string> who = {a->label, b->label};
      std::sort(who.begin(), who.end());
      out.push_back({id, std::move(who),
                     "interval shorter than " +
                         std::to_string(scenario.min_interval_s) + "s"});
    }
  }
  return out;
}

double ObjectiveValue(const Scenario& scenario, const Schedule& schedule) {
  std::set<std::string> satellites;
  for (const Satellite& s : scenario.satellites) satellites.insert(s.id);
  std::set<std::string> whole;
  std::map<std::string, std::set<int>> pieces;
  for (const Assignment& a : schedule.assignments) {
    if (!satellites.contains(a.satellite_id)) continue;
    if (a.subtask_index) {
      pieces[a.task_id].insert(*a.subtask_index);
    } else {
      whole.insert(a.task_id);
    }
  }
  double total = 0.0;
  for (const ObsTask& task : scenario.obs_tasks) {
    if (!task.separable) {
      if (whole.contains(task.id)) total += task.profit;
      continue;
    }
    auto plan = schedule.split_plans.find(task.id);
    auto done = pieces.find(task.id);
    if (plan == schedule.split_plans.end() || done == pieces.end() ||
        !plan->second.feasible()) {
      continue;
    }
    const int n = static_cast<int>(plan->second.subtask_durations.size());
    bool complete = true;
    for (int m = 0; m < n; ++m) complete = complete && done->second.contains(m);
    if (complete) total += task.profit;
  }
  return total;
}

Decoder::Decoder(const Scenario& scenario) : scenario_(&scenario) {
  if (scenario.kind != ProblemKind::kMsjopp) {
    throw InputError("MSJOPP decoder needs an MSJOPP scenario");
  }
  if (auto issues = ValidateScenario(scenario); !issues.empty()) {
    throw InputError("invalid scenario: " + issues.front().ToLine());
  }
  std::map<std::string, int> sat_index;
  for (std::size_t i = 0; i < scenario.satellites.size(); ++i) {
    sat_index.emplace(scenario.satellites[i].id, static_cast<int>(i));
  }
  std::map<std::string, int> task_index;
  for (std::size_t i = 0; i < scenario.obs_tasks.size(); ++i) {
    task_index.emplace(scenario.obs_tasks[i].id, static_cast<int>(i));
  }
  const std::size_t n = scenario.obs_tasks.size();
  windows_.resize(n);
  std::vector<std::vector<VisibleWindow>> by_task(n);
  for (std::size_t wi = 0; wi < scenario.windows.size(); ++wi) {
    const VisibleWindow& w = scenario.windows[wi];
    const int t = task_index.at(w.task_id);
    windows_[t].push_back({static_cast<int>(wi), sat_index.at(w.satellite_id)});
    by_task[t].push_back(w);
  }
  plans_.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    std::sort(windows_[t].begin(), windows_[t].end(),
              [&](const WindowInfo& a, const WindowInfo& b) {
                const VisibleWindow& wa = scenario.windows[a.window];
                const VisibleWindow& wb = scenario.windows[b.window];
                return std::tie(a.satellite, wa.orbit_index, wa.evt_s,
                                wa.window_index) <
                       std::tie(b.satellite, wb.orbit_index, wb.evt_s,
                                wb.window_index);
              });
    const ObsTask& task = scenario.obs_tasks[t];
    if (task.separable) plans_[t] = SplitTask(task, by_task[t]);
  }
}

Decoder::State Decoder::EmptyState() const {
  State state;
  state.satellites.resize(scenario_->satellites.size());
  state.placed.assign(plans_.size(), false);
  state.profit.assign(plans_.size(), 0.0);
  return state;
}

double Decoder::Objective(const State& state) {
  double total = 0.0;
  for (double p : state.profit) total += p;
  return total;
}

double Decoder::ProfitBound(int task) const {
  const ObsTask& t = scenario_->obs_tasks[task];
  if (windows_[task].empty() || (t.separable && !plans_[task].feasible())) {
    return 0.0;
  }
  return t.profit;
}

Seconds Decoder::EarliestStart(const State& state, int task, Seconds observed,
                               const WindowInfo& info) const {
  const ObsTask& t = scenario_->obs_tasks[task];
  const VisibleWindow& w = scenario_->windows[info.window];
  const Seconds gap = scenario_->min_interval_s;
  Seconds start = std::max(w.evt_s, t.est_s);
  const Seconds latest = std::min(w.lvt_s, t.let_s) - observed;
  // Placed intervals are disjoint and sorted, so one sweep suffices.
  for (const State::Placed& p : state.satellites[info.satellite]) {
    if (start > latest) return -1;
    if (p.end + gap <= start) continue;
    if (start + observed + gap <= p.start) break;
    start = p.end + gap;
  }
  return start <= latest ? start : -1;
}

bool Decoder::PlacePiece(State& state, int task, int subtask,
                         Seconds observed) const {
  const WindowInfo* chosen = nullptr;
  Seconds best = -1;
  for (const WindowInfo& info : windows_[task]) {
    const Seconds start = EarliestStart(state, task, observed, info);
    if (start >= 0 && (chosen == nullptr || start < best)) {
      chosen = &info;
      best = start;
    }
  }
  if (chosen == nullptr) return false;
  const State::Placed placed{task, subtask, chosen->window, best,
                             best + observed};
  auto& lane = state.satellites[chosen->satellite];
  lane.insert(std::upper_bound(lane.begin(), lane.end(), placed,
                               [](const State::Placed& a,
                                  const State::Placed& b) {
                                 return a.start < b.start;
                               }),
              placed);
  state.order.push_back(placed);
  return true;
}

bool Decoder::TryPlace(State& state, int task) const {
  if (task < 0 || task >= task_count()) {
    throw InputError("task index out of range");
  }
  if (state.placed[task]) return false;
  const ObsTask& t = scenario_->obs_tasks[task];
  if (!t.separable) {
    if (!PlacePiece(state, task, -1, t.duration_s)) return false;
  } else {
    const SplitPlan& plan = plans_[task];
    if (!plan.feasible()) return false;
    State trial = state;
    for (std::size_t m = 0; m < plan.subtask_durations.size(); ++m) {
      if (!PlacePiece(trial, task, static_cast<int>(m),
                      plan.subtask_durations[m])) {
        return false;
      }
    }
    state = std::move(trial);
  }
  state.placed[task] = true;
  state.profit[task] = t.profit;
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
  for (const State::Placed& p : state.order) {
    const VisibleWindow& w = scenario_->windows[p.window];
    Assignment a{w.satellite_id, w.task_id, std::nullopt, w.window_index,
                 p.start, p.end - p.start};
    if (p.subtask >= 0) {
      a.subtask_index = p.subtask;
      schedule.split_plans.emplace(w.task_id, plans_[p.task]);
    }
    schedule.assignments.push_back(std::move(a));
  }
  return schedule;
}

}  // namespace satsched::msjopp
