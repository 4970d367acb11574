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

#include "satsched/io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace satsched::io {

namespace {

using Json = nlohmann::ordered_json;

// Strict accessors. `where` is the JSON path of the object being read.
class Reader {
 public:
  Reader(const Json& node, std::string where)
      : node_(node), where_(std::move(where)) {
    if (!node_.is_object()) Fail(where_, "expected an object");
  }

  // Every listed key must be present and no other key may appear.
  void ExpectKeys(std::initializer_list<const char*> keys) const {
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [key, value] : node_.items()) {
      if (!allowed.contains(key)) Fail(Path(key), "unknown key");
    }
    for (const std::string& key : allowed) {
      if (!node_.contains(key)) Fail(Path(key), "missing key");
    }
  }

  const Json& At(const std::string& key) const {
    if (!node_.contains(key)) Fail(Path(key), "missing key");
    return node_.at(key);
  }

  std::string String(const std::string& key) const {
    const Json& v = At(key);
    if (!v.is_string()) Fail(Path(key), "expected a string");
    return v.get<std::string>();
  }

  std::optional<std::string> OptionalString(const std::string& key) const {
    const Json& v = At(key);
    if (v.is_null()) return std::nullopt;
    return String(key);
  }

  bool Bool(const std::string& key) const {
    const Json& v = At(key);
    if (!v.is_boolean()) Fail(Path(key), "expected a boolean");
    return v.get<bool>();
  }

  std::int64_t Integer(const std::string& key) const {
    return IntegerValue(At(key), Path(key));
  }

  int Int(const std::string& key) const {
    const std::int64_t v = Integer(key);
    if (v < std::numeric_limits<int>::min() ||
        v > std::numeric_limits<int>::max()) {
      Fail(Path(key), "integer out of range");
    }
    return static_cast<int>(v);
  }

  std::uint64_t Unsigned(const std::string& key) const {
    const Json& v = At(key);
    if (!v.is_number_unsigned()) {
      Fail(Path(key), "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  double Number(const std::string& key) const {
    return NumberValue(At(key), Path(key));
  }

  const Json& Array(const std::string& key) const {
    const Json& v = At(key);
    if (!v.is_array()) Fail(Path(key), "expected an array");
    return v;
  }

  std::string Path(const std::string& key) const { return where_ + "." + key; }

  static std::int64_t IntegerValue(const Json& v, const std::string& where) {
    if (!v.is_number_integer()) Fail(where, "expected an integer");
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() >
            static_cast<std::uint64_t>(
                std::numeric_limits<std::int64_t>::max())) {
      Fail(where, "integer out of range");
    }
    return v.get<std::int64_t>();
  }

  static double NumberValue(const Json& v, const std::string& where) {
    if (!v.is_number()) Fail(where, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) Fail(where, "expected a finite number");
    return d;
  }

  [[noreturn]] static void Fail(const std::string& where,
                                const std::string& what) {
    throw InputError(where + ": " + what);
  }

 private:
  const Json& node_;
  std::string where_;
};

std::string Index(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

ProblemKind ParseKind(const std::string& name, const std::string& where) {
  if (name == "edssp") return ProblemKind::kEdssp;
  if (name == "msjopp") return ProblemKind::kMsjopp;
  Reader::Fail(where, "kind must be \"edssp\" or \"msjopp\"");
}

void CheckVersion(const Reader& r) {
  const std::int64_t version = r.Integer("version");
  if (version != kFormatVersion) {
    Reader::Fail(r.Path("version"),
                 "unsupported version " + std::to_string(version));
  }
}

Json Parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

// ---- scenario ----

Json TableToJson(const TransitionTable& table) {
  Json out = Json::array();
  for (const auto& [key, seconds] : table.entries()) {
    out.push_back({{"from", key.first}, {"to", key.second}, {"seconds", seconds}});
  }
  return out;
}

TransitionTable TableFromJson(const Json& node, const std::string& where) {
  if (!node.is_array()) Reader::Fail(where, "expected an array");
  TransitionTable table;
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const Reader r(node[i], Index(where, i));
    r.ExpectKeys({"from", "to", "seconds"});
    const int from = r.Int("from");
    const int to = r.Int("to");
    if (!seen.insert({from, to}).second) {
      Reader::Fail(Index(where, i), "duplicate transition entry");
    }
    table.Set(from, to, r.Integer("seconds"));
  }
  return table;
}

Json SatelliteToJson(const Satellite& sat, ProblemKind kind) {
  if (kind == ProblemKind::kMsjopp) {
    return {{"id", sat.id}, {"orbit_count", sat.orbit_count}};
  }
  const TransitionTables& t = sat.transition_tables;
  return {{"id", sat.id},
          {"antenna_diameter_m", sat.antenna_diameter_m},
          {"antenna_efficiency", sat.antenna_efficiency},
          {"unit_data_rate", sat.unit_data_rate},
          {"storage_capacity", sat.storage_capacity},
          {"poweron_time_s", sat.poweron_time_s},
          {"orbit_count", sat.orbit_count},
          {"transition_tables",
           {{"polarization", TableToJson(t.polarization)},
            {"mode", TableToJson(t.mode)},
            {"bandwidth", TableToJson(t.bandwidth)},
            {"frequency", TableToJson(t.frequency)}}}};
}

Satellite SatelliteFromJson(const Json& node, const std::string& where,
                            ProblemKind kind) {
  const Reader r(node, where);
  Satellite sat;
  if (kind == ProblemKind::kMsjopp) {
    r.ExpectKeys({"id", "orbit_count"});
    sat.id = r.String("id");
    sat.orbit_count = r.Int("orbit_count");
    return sat;
  }
  r.ExpectKeys({"id", "antenna_diameter_m", "antenna_efficiency",
                "unit_data_rate", "storage_capacity", "poweron_time_s",
                "orbit_count", "transition_tables"});
  sat.id = r.String("id");
  sat.antenna_diameter_m = r.Number("antenna_diameter_m");
  sat.antenna_efficiency = r.Number("antenna_efficiency");
  sat.unit_data_rate = r.Number("unit_data_rate");
  sat.storage_capacity = r.Number("storage_capacity");
  sat.poweron_time_s = r.Integer("poweron_time_s");
  sat.orbit_count = r.Int("orbit_count");
  const std::string tw = r.Path("transition_tables");
  const Reader t(r.At("transition_tables"), tw);
  t.ExpectKeys({"polarization", "mode", "bandwidth", "frequency"});
  TransitionTables& tables = sat.transition_tables;
  tables.polarization = TableFromJson(t.At("polarization"), t.Path("polarization"));
  tables.mode = TableFromJson(t.At("mode"), t.Path("mode"));
  tables.bandwidth = TableFromJson(t.At("bandwidth"), t.Path("bandwidth"));
  tables.frequency = TableFromJson(t.At("frequency"), t.Path("frequency"));
  return sat;
}

Json EdsspTaskToJson(const EdsspTask& task) {
  return {{"id", task.id},
          {"est_s", task.est_s},
          {"let_s", task.let_s},
          {"duration_s", task.duration_s},
          {"max_angle_rad", task.max_angle_rad},
          {"degree", task.degree},
          {"wavelength_m", task.wavelength_m},
          {"frequency", task.frequency},
          {"polarization", task.polarization},
          {"mode", task.mode}};
}

EdsspTask EdsspTaskFromJson(const Json& node, const std::string& where) {
  const Reader r(node, where);
  r.ExpectKeys({"id", "est_s", "let_s", "duration_s", "max_angle_rad",
                "degree", "wavelength_m", "frequency", "polarization",
                "mode"});
  EdsspTask task;
  task.id = r.String("id");
  task.est_s = r.Integer("est_s");
  task.let_s = r.Integer("let_s");
  task.duration_s = r.Integer("duration_s");
  task.max_angle_rad = r.Number("max_angle_rad");
  task.degree = r.Int("degree");
  task.wavelength_m = r.Number("wavelength_m");
  task.frequency = r.Int("frequency");
  task.polarization = r.Int("polarization");
  task.mode = r.Int("mode");
  return task;
}

Json ObsTaskToJson(const ObsTask& task) {
  return {{"id", task.id},
          {"est_s", task.est_s},
          {"let_s", task.let_s},
          {"duration_s", task.duration_s},
          {"profit", task.profit},
          {"separable", task.separable}};
}

ObsTask ObsTaskFromJson(const Json& node, const std::string& where) {
  const Reader r(node, where);
  r.ExpectKeys({"id", "est_s", "let_s", "duration_s", "profit", "separable"});
  ObsTask task;
  task.id = r.String("id");
  task.est_s = r.Integer("est_s");
  task.let_s = r.Integer("let_s");
  task.duration_s = r.Integer("duration_s");
  task.profit = r.Number("profit");
  task.separable = r.Bool("separable");
  return task;
}

Json WindowToJson(const VisibleWindow& w, ProblemKind kind) {
  Json out = {{"satellite_id", w.satellite_id},
              {"task_id", w.task_id},
              {"orbit_index", w.orbit_index},
              {"window_index", w.window_index},
              {"evt_s", w.evt_s},
              {"lvt_s", w.lvt_s}};
  if (kind == ProblemKind::kEdssp) {
    Json profile = Json::array();
    for (const AngleSample& s : w.angle_profile) {
      profile.push_back({{"time_s", s.time_s}, {"angle_rad", s.angle_rad}});
    }
    out["angle_profile"] = std::move(profile);
  }
  return out;
}

VisibleWindow WindowFromJson(const Json& node, const std::string& where,
                             ProblemKind kind) {
  const Reader r(node, where);
  if (kind == ProblemKind::kEdssp) {
    r.ExpectKeys({"satellite_id", "task_id", "orbit_index", "window_index",
                  "evt_s", "lvt_s", "angle_profile"});
  } else {
    r.ExpectKeys({"satellite_id", "task_id", "orbit_index", "window_index",
                  "evt_s", "lvt_s"});
  }
  VisibleWindow w;
  w.satellite_id = r.String("satellite_id");
  w.task_id = r.String("task_id");
  w.orbit_index = r.Int("orbit_index");
  w.window_index = r.Int("window_index");
  w.evt_s = r.Integer("evt_s");
  w.lvt_s = r.Integer("lvt_s");
  if (kind == ProblemKind::kEdssp) {
    const Json& profile = r.Array("angle_profile");
    for (std::size_t i = 0; i < profile.size(); ++i) {
      const Reader s(profile[i], Index(r.Path("angle_profile"), i));
      s.ExpectKeys({"time_s", "angle_rad"});
      w.angle_profile.push_back({s.Integer("time_s"), s.Number("angle_rad")});
    }
  }
  return w;
}

Json ScenarioToJson(const Scenario& s) {
  Json out;
  out["version"] = kFormatVersion;
  out["kind"] = ProblemKindName(s.kind);
  out["horizon"] = {{"start_s", s.horizon.start_s}, {"end_s", s.horizon.end_s}};
  Json sats = Json::array();
  for (const Satellite& sat : s.satellites) {
    sats.push_back(SatelliteToJson(sat, s.kind));
  }
  out["satellites"] = std::move(sats);
  Json tasks = Json::array();
  if (s.kind == ProblemKind::kEdssp) {
    for (const EdsspTask& t : s.edssp_tasks) tasks.push_back(EdsspTaskToJson(t));
  } else {
    for (const ObsTask& t : s.obs_tasks) tasks.push_back(ObsTaskToJson(t));
  }
  out["tasks"] = std::move(tasks);
  Json windows = Json::array();
  for (const VisibleWindow& w : s.windows) {
    windows.push_back(WindowToJson(w, s.kind));
  }
  out["windows"] = std::move(windows);
  if (s.kind == ProblemKind::kEdssp) {
    out["bandwidth_levels"] = s.bandwidth_levels;
  } else {
    out["min_interval_s"] = s.min_interval_s;
  }
  return out;
}

Scenario ScenarioFromJson(const Json& node, const std::string& where) {
  const Reader r(node, where);
  Scenario s;
  s.kind = ParseKind(r.String("kind"), r.Path("kind"));
  if (s.kind == ProblemKind::kEdssp) {
    r.ExpectKeys({"version", "kind", "horizon", "satellites", "tasks",
                  "windows", "bandwidth_levels"});
  } else {
    r.ExpectKeys({"version", "kind", "horizon", "satellites", "tasks",
                  "windows", "min_interval_s"});
  }
  CheckVersion(r);
  const Reader h(r.At("horizon"), r.Path("horizon"));
  h.ExpectKeys({"start_s", "end_s"});
  s.horizon = {h.Integer("start_s"), h.Integer("end_s")};

  const Json& sats = r.Array("satellites");
  for (std::size_t i = 0; i < sats.size(); ++i) {
    s.satellites.push_back(
        SatelliteFromJson(sats[i], Index(r.Path("satellites"), i), s.kind));
  }
  const Json& tasks = r.Array("tasks");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string w = Index(r.Path("tasks"), i);
    if (s.kind == ProblemKind::kEdssp) {
      s.edssp_tasks.push_back(EdsspTaskFromJson(tasks[i], w));
    } else {
      s.obs_tasks.push_back(ObsTaskFromJson(tasks[i], w));
    }
  }
  const Json& windows = r.Array("windows");
  for (std::size_t i = 0; i < windows.size(); ++i) {
    s.windows.push_back(
        WindowFromJson(windows[i], Index(r.Path("windows"), i), s.kind));
  }
  if (s.kind == ProblemKind::kEdssp) {
    const Json& levels = r.Array("bandwidth_levels");
    if (levels.size() != s.bandwidth_levels.size()) {
      Reader::Fail(r.Path("bandwidth_levels"), "expected 4 levels");
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
      s.bandwidth_levels[i] =
          Reader::NumberValue(levels[i], Index(r.Path("bandwidth_levels"), i));
    }
  } else {
    s.min_interval_s = r.Integer("min_interval_s");
  }
  return s;
}

void RequireValid(const Scenario& scenario) {
  const std::vector<Violation> violations = ValidateScenario(scenario);
  if (violations.empty()) return;
  std::string msg = "invalid scenario:";
  for (const Violation& v : violations) msg += "\n" + v.ToLine();
  throw InputError(msg);
}

// ---- result ----

Json ViolationToJson(const Violation& v) {
  return {{"constraint_id", ConstraintIdName(v.constraint_id)},
          {"entities", v.entities},
          {"message", v.message}};
}

Violation ViolationFromJson(const Json& node, const std::string& where) {
  const Reader r(node, where);
  r.ExpectKeys({"constraint_id", "entities", "message"});
  Violation v;
  try {
    v.constraint_id = ConstraintIdFromName(r.String("constraint_id"));
  } catch (const InputError& e) {
    Reader::Fail(r.Path("constraint_id"), e.what());
  }
  const Json& entities = r.Array("entities");
  for (std::size_t i = 0; i < entities.size(); ++i) {
    if (!entities[i].is_string()) {
      Reader::Fail(Index(r.Path("entities"), i), "expected a string");
    }
    v.entities.push_back(entities[i].get<std::string>());
  }
  v.message = r.String("message");
  return v;
}

const char* PolicyName(rl_ea::SelectionPolicy policy) {
  return policy == rl_ea::SelectionPolicy::kQLearning ? "q-learning"
                                                      : "uniform";
}

Json ConfigToJson(const rl_ea::Config& c) {
  return {{"pop_size", c.population_size},
          {"alpha", c.alpha},
          {"gamma", c.gamma},
          {"epsilon", c.epsilon},
          {"control_t", c.control_t},
          {"generations", c.max_generations},
          {"seed", c.seed},
          {"time_limit_s", c.time_limit_s},
          {"policy", PolicyName(c.policy)}};
}

rl_ea::Config ConfigFromJson(const Json& node, const std::string& where) {
  const Reader r(node, where);
  r.ExpectKeys({"pop_size", "alpha", "gamma", "epsilon", "control_t",
                "generations", "seed", "time_limit_s", "policy"});
  rl_ea::Config c;
  c.population_size = r.Int("pop_size");
  c.alpha = r.Number("alpha");
  c.gamma = r.Number("gamma");
  c.epsilon = r.Number("epsilon");
  c.control_t = r.Int("control_t");
  c.max_generations = r.Int("generations");
  c.seed = r.Unsigned("seed");
  c.time_limit_s = r.Number("time_limit_s");
  const std::string policy = r.String("policy");
  if (policy == "q-learning") {
    c.policy = rl_ea::SelectionPolicy::kQLearning;
  } else if (policy == "uniform") {
    c.policy = rl_ea::SelectionPolicy::kUniform;
  } else {
    Reader::Fail(r.Path("policy"), "policy must be q-learning or uniform");
  }
  return c;
}

Json AssignmentsToJson(const Solution& solution) {
  Json out = Json::array();
  if (solution.kind == ProblemKind::kEdssp) {
    for (const edssp::Assignment& a : solution.edssp.assignments) {
      out.push_back({{"satellite_id", a.satellite_id},
                     {"task_id", a.task_id},
                     {"orbit_index", a.orbit_index},
                     {"window_index", a.window_index},
                     {"start_s", a.start_s}});
    }
  } else {
    for (const msjopp::Assignment& a : solution.msjopp.assignments) {
      Json item = {{"satellite_id", a.satellite_id}, {"task_id", a.task_id}};
      item["subtask_index"] =
          a.subtask_index ? Json(*a.subtask_index) : Json(nullptr);
      item["window_index"] = a.window_index;
      item["start_s"] = a.start_s;
      item["observed_s"] = a.observed_s;
      out.push_back(std::move(item));
    }
  }
  return out;
}

void AssignmentsFromJson(const Json& node, const std::string& where,
                         Solution& solution) {
  for (std::size_t i = 0; i < node.size(); ++i) {
    const Reader r(node[i], Index(where, i));
    if (solution.kind == ProblemKind::kEdssp) {
      r.ExpectKeys({"satellite_id", "task_id", "orbit_index", "window_index",
                    "start_s"});
      solution.edssp.assignments.push_back(
          {r.String("satellite_id"), r.String("task_id"), r.Int("orbit_index"),
           r.Int("window_index"), r.Integer("start_s")});
    } else {
      r.ExpectKeys({"satellite_id", "task_id", "subtask_index", "window_index",
                    "start_s", "observed_s"});
      msjopp::Assignment a;
      a.satellite_id = r.String("satellite_id");
      a.task_id = r.String("task_id");
      if (!r.At("subtask_index").is_null()) {
        a.subtask_index = r.Int("subtask_index");
      }
      a.window_index = r.Int("window_index");
      a.start_s = r.Integer("start_s");
      a.observed_s = r.Integer("observed_s");
      solution.msjopp.assignments.push_back(std::move(a));
    }
  }
}

Json SplitPlansToJson(const msjopp::Schedule& schedule) {
  Json out = Json::array();
  for (const auto& [task_id, plan] : schedule.split_plans) {
    out.push_back({{"parent_task_id", plan.parent_task_id},
                   {"subtask_durations", plan.subtask_durations}});
  }
  return out;
}

void SplitPlansFromJson(const Json& node, const std::string& where,
                        msjopp::Schedule& schedule) {
  for (std::size_t i = 0; i < node.size(); ++i) {
    const Reader r(node[i], Index(where, i));
    r.ExpectKeys({"parent_task_id", "subtask_durations"});
    msjopp::SplitPlan plan;
    plan.parent_task_id = r.String("parent_task_id");
    const Json& durations = r.Array("subtask_durations");
    for (std::size_t k = 0; k < durations.size(); ++k) {
      plan.subtask_durations.push_back(Reader::IntegerValue(
          durations[k], Index(r.Path("subtask_durations"), k)));
    }
    if (schedule.split_plans.contains(plan.parent_task_id)) {
      Reader::Fail(Index(where, i), "duplicate split plan");
    }
    schedule.split_plans.emplace(plan.parent_task_id, std::move(plan));
  }
}

std::string XmlEscape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

Scenario ParseScenarioUnchecked(const std::string& text) {
  return ScenarioFromJson(Parse(text), "scenario");
}

Scenario ParseScenario(const std::string& text) {
  Scenario s = ParseScenarioUnchecked(text);
  RequireValid(s);
  return s;
}

std::string SerializeScenario(const Scenario& scenario) {
  return ScenarioToJson(scenario).dump(2) + "\n";
}

std::string SerializeResult(const ResultFile& result) {
  const Solution& sol = result.solution;
  Json out;
  out["version"] = kFormatVersion;
  out["kind"] = ProblemKindName(sol.kind);
  out["method"] = result.method;
  out["objective"] = sol.objective;
  out["assignments"] = AssignmentsToJson(sol);
  if (sol.kind == ProblemKind::kMsjopp) {
    out["split_plans"] = SplitPlansToJson(sol.msjopp);
  }
  Json violations = Json::array();
  for (const Violation& v : result.violations) {
    violations.push_back(ViolationToJson(v));
  }
  out["violations"] = std::move(violations);
  out["trace"] = result.trace ? Json(*result.trace) : Json(nullptr);
  out["config"] = result.config ? ConfigToJson(*result.config) : Json(nullptr);
  out["seed"] = result.config ? Json(result.config->seed) : Json(nullptr);
  out["stats"] = {{"generations", result.stats.generations},
                  {"best_generation", result.stats.best_generation},
                  {"nodes_explored", result.stats.nodes_explored}};
  out["scenario"] = ScenarioToJson(result.scenario);
  return out.dump(2) + "\n";
}

ResultFile ParseResult(const std::string& text) {
  const Json root = Parse(text);
  const Reader r(root, "result");
  ResultFile result;
  Solution& sol = result.solution;
  sol.kind = ParseKind(r.String("kind"), r.Path("kind"));
  if (sol.kind == ProblemKind::kEdssp) {
    r.ExpectKeys({"version", "kind", "method", "objective", "assignments",
                  "violations", "trace", "config", "seed", "stats",
                  "scenario"});
  } else {
    r.ExpectKeys({"version", "kind", "method", "objective", "assignments",
                  "split_plans", "violations", "trace", "config", "seed",
                  "stats", "scenario"});
  }
  CheckVersion(r);
  result.method = r.String("method");
  sol.objective = r.Number("objective");
  AssignmentsFromJson(r.Array("assignments"), r.Path("assignments"), sol);
  if (sol.kind == ProblemKind::kMsjopp) {
    SplitPlansFromJson(r.Array("split_plans"), r.Path("split_plans"),
                       sol.msjopp);
  }
  const Json& violations = r.Array("violations");
  for (std::size_t i = 0; i < violations.size(); ++i) {
    result.violations.push_back(
        ViolationFromJson(violations[i], Index(r.Path("violations"), i)));
  }
  result.trace = r.OptionalString("trace");
  if (!r.At("config").is_null()) {
    result.config = ConfigFromJson(r.At("config"), r.Path("config"));
    if (r.At("seed").is_null() || r.Unsigned("seed") != result.config->seed) {
      Reader::Fail(r.Path("seed"), "seed does not match config");
    }
  } else if (!r.At("seed").is_null()) {
    Reader::Fail(r.Path("seed"), "seed without config");
  }
  const Reader st(r.At("stats"), r.Path("stats"));
  st.ExpectKeys({"generations", "best_generation", "nodes_explored"});
  result.stats = {st.Int("generations"), st.Int("best_generation"),
                  st.Integer("nodes_explored")};
  result.scenario = ScenarioFromJson(r.At("scenario"), r.Path("scenario"));
  if (result.scenario.kind != sol.kind) {
    Reader::Fail(r.Path("kind"), "does not match the embedded scenario");
  }
  RequireValid(result.scenario);
  return result;
}

std::string TraceCsv(const std::vector<rl_ea::TraceRow>& trace) {
  std::ostringstream out;
  out << "generation,state,action,reward,best_fitness,mean_fitness,epsilon\n";
  for (const rl_ea::TraceRow& row : trace) {
    out << row.generation << ',' << row.state.Name() << ','
        << row.action_name << ',' << FormatDouble(row.reward) << ','
        << FormatDouble(row.best_fitness) << ','
        << FormatDouble(row.mean_fitness) << ','
        << FormatDouble(row.epsilon) << '\n';
  }
  return out.str();
}

std::string GanttSvg(const Scenario& scenario, const Solution& solution) {
  struct Bar {
    std::string satellite;
    int orbit;
    Seconds start;
    Seconds end;
    std::string label;
  };
  std::vector<Bar> bars;
  if (solution.kind == ProblemKind::kEdssp) {
    std::map<std::string, Seconds> duration;
    for (const EdsspTask& t : scenario.edssp_tasks) {
      duration[t.id] = t.duration_s;
    }
    for (const edssp::Assignment& a : solution.edssp.assignments) {
      const auto it = duration.find(a.task_id);
      const Seconds dur = it == duration.end() ? 0 : it->second;
      bars.push_back({a.satellite_id, a.orbit_index, a.start_s,
                      a.start_s + dur, a.task_id});
    }
  } else {
    for (const msjopp::Assignment& a : solution.msjopp.assignments) {
      std::string label = a.task_id;
      if (a.subtask_index) label += "#" + std::to_string(*a.subtask_index);
      bars.push_back({a.satellite_id, 0, a.start_s, a.start_s + a.observed_s,
                      label});
    }
  }

  // Lanes: every satellite-orbit of the scenario, then any stray lane named
  // by an assignment.
  std::vector<std::pair<std::string, int>> lanes;
  for (const Satellite& sat : scenario.satellites) {
    const int orbits =
        solution.kind == ProblemKind::kEdssp ? std::max(sat.orbit_count, 1) : 1;
    for (int o = 0; o < orbits; ++o) lanes.emplace_back(sat.id, o);
  }
  for (const Bar& b : bars) {
    const std::pair<std::string, int> key{b.satellite, b.orbit};
    if (std::find(lanes.begin(), lanes.end(), key) == lanes.end()) {
      lanes.push_back(key);
    }
  }

  constexpr double kLeft = 120.0;
  constexpr double kWidth = 1000.0;
  constexpr double kLaneHeight = 30.0;
  constexpr double kTop = 20.0;
  const double span = static_cast<double>(
      std::max<Seconds>(scenario.horizon.end_s - scenario.horizon.start_s, 1));
  const double scale = kWidth / span;
  const double height = kTop + kLaneHeight * static_cast<double>(lanes.size()) + 20.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << FormatDouble(kLeft + kWidth + 20.0) << "\" height=\""
      << FormatDouble(height) << "\" font-family=\"monospace\" font-size=\"10\">\n";
  for (std::size_t i = 0; i < lanes.size(); ++i) {
    const double y = kTop + kLaneHeight * static_cast<double>(i);
    std::string name = lanes[i].first;
    if (solution.kind == ProblemKind::kEdssp) {
      name += " orbit " + std::to_string(lanes[i].second);
    }
    out << "<text x=\"4\" y=\"" << FormatDouble(y + 18.0) << "\">"
        << XmlEscape(name) << "</text>\n";
    out << "<line x1=\"" << FormatDouble(kLeft) << "\" y1=\""
        << FormatDouble(y + kLaneHeight) << "\" x2=\""
        << FormatDouble(kLeft + kWidth) << "\" y2=\""
        << FormatDouble(y + kLaneHeight) << "\" stroke=\"#ccc\"/>\n";
  }
  for (const Bar& b : bars) {
    const std::pair<std::string, int> key{b.satellite, b.orbit};
    const auto lane = static_cast<double>(
        std::find(lanes.begin(), lanes.end(), key) - lanes.begin());
    const double x =
        kLeft + static_cast<double>(b.start - scenario.horizon.start_s) * scale;
    const double w = std::max(static_cast<double>(b.end - b.start) * scale, 1.0);
    const double y = kTop + kLaneHeight * lane + 4.0;
    out << "<rect x=\"" << FormatDouble(x) << "\" y=\"" << FormatDouble(y)
        << "\" width=\"" << FormatDouble(w) << "\" height=\""
        << FormatDouble(kLaneHeight - 8.0)
        << "\" fill=\"#6a9fd4\" stroke=\"#234\"/>\n";
    out << "<text x=\"" << FormatDouble(x + 2.0) << "\" y=\""
        << FormatDouble(y + 14.0) << "\">" << XmlEscape(b.label)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace satsched::io
