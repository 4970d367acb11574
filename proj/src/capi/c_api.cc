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

#include "satsched/c_api.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "json.hpp"
#include "satsched/bench.h"
#include "satsched/generate.h"
#include "satsched/io.h"
#include "satsched/oracle.h"
#include "satsched/solver.h"

struct satsched_scenario {
  satsched::Scenario scenario;
};

struct satsched_result {
  satsched::io::ResultFile file;
  std::vector<satsched::rl_ea::TraceRow> trace;
  bool has_trace = false;
};

namespace {

using satsched::InputError;

thread_local std::string g_last_error;

satsched_status Fail(satsched_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body`, mapping exceptions onto status codes.
template <typename F>
satsched_status Guard(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const InputError& e) {
    return Fail(SATSCHED_BAD_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(SATSCHED_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return Fail(SATSCHED_INTERNAL_ERROR, e.what());
  } catch (...) {
    return Fail(SATSCHED_INTERNAL_ERROR, "unknown error");
  }
}

void Require(const void* p, const char* what) {
  if (p == nullptr) throw InputError(std::string(what) + " is null");
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

satsched::rl_ea::Config ToConfig(const satsched_solver_config* c) {
  satsched::rl_ea::Config config;
  if (c == nullptr) return config;
  config.population_size = c->population_size;
  config.alpha = c->alpha;
  config.gamma = c->gamma;
  config.epsilon = c->epsilon;
  config.control_t = c->control_t;
  config.max_generations = c->max_generations;
  config.seed = c->seed;
  config.time_limit_s = c->time_limit_s;
  config.policy = c->uniform_policy ? satsched::rl_ea::SelectionPolicy::kUniform
                                    : satsched::rl_ea::SelectionPolicy::kQLearning;
  return config;
}

satsched::ProblemKind ToKind(satsched_kind kind) {
  switch (kind) {
    case SATSCHED_KIND_EDSSP: return satsched::ProblemKind::kEdssp;
    case SATSCHED_KIND_MSJOPP: return satsched::ProblemKind::kMsjopp;
  }
  throw InputError("unknown problem kind");
}

satsched::GenerateParams ToParams(const satsched_generate_params* p) {
  satsched::GenerateParams params;
  params.n_satellites = p->n_satellites;
  params.n_tasks = p->n_tasks;
  params.n_windows_per_task = p->n_windows_per_task;
  params.separable_fraction = p->separable_fraction;
  params.horizon_s = p->horizon_s;
  params.seed = p->seed;
  params.orbits_per_satellite = p->orbits_per_satellite;
  params.min_duration_s = p->min_duration_s;
  params.max_duration_s = p->max_duration_s;
  return params;
}

std::vector<satsched::Violation> CheckResult(const satsched::Scenario* external,
                                             const satsched::io::ResultFile& f) {
  const satsched::Scenario& scenario = external ? *external : f.scenario;
  std::vector<satsched::Violation> out =
      satsched::CheckSolution(scenario, f.solution);
  if (out.empty()) {
    const double recomputed = satsched::SolutionObjective(scenario, f.solution);
    if (recomputed != f.solution.objective) {
      out.push_back({satsched::ConstraintId::kScenario,
                     {"objective"},
                     "recorded " +
                         satsched::io::FormatDouble(f.solution.objective) +
                         " but schedule yields " +
                         satsched::io::FormatDouble(recomputed)});
    }
  }
  return out;
}

std::string Lines(const std::vector<satsched::Violation>& violations) {
  std::string out;
  for (const satsched::Violation& v : violations) out += v.ToLine() + "\n";
  return out;
}

std::string JsonList(const std::vector<satsched::Violation>& violations) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const satsched::Violation& v : violations) {
    out.push_back({{"constraint_id",
                    satsched::ConstraintIdName(v.constraint_id)},
                   {"entities", v.entities},
                   {"message", v.message}});
  }
  return out.dump(2) + "\n";
}

satsched_status Report(const std::vector<satsched::Violation>& violations,
                       bool json, char** report) {
  if (report != nullptr) {
    *report = CopyString(json ? JsonList(violations) : Lines(violations));
  }
  return violations.empty() ? SATSCHED_OK : SATSCHED_VIOLATIONS;
}

satsched_status Bench(const std::vector<satsched::bench::Instance>& suite,
                      const satsched_solver_config* c, int as_json,
                      char** out) {
  Require(out, "out");
  const auto rows = satsched::bench::RunBenchmark(suite, ToConfig(c));
  *out = CopyString(as_json ? satsched::bench::ToJson(rows)
                            : satsched::bench::ToCsv(rows));
  return SATSCHED_OK;
}

}  // namespace

extern "C" {

const char* satsched_version(void) { return "1.0.0"; }

const char* satsched_last_error(void) { return g_last_error.c_str(); }

void satsched_string_free(char* s) { std::free(s); }

void satsched_solver_config_default(satsched_solver_config* c) {
  if (c == nullptr) return;
  const satsched::rl_ea::Config d;
  c->population_size = d.population_size;
  c->alpha = d.alpha;
  c->gamma = d.gamma;
  c->epsilon = d.epsilon;
  c->control_t = d.control_t;
  c->max_generations = d.max_generations;
  c->seed = d.seed;
  c->time_limit_s = d.time_limit_s;
  c->uniform_policy = 0;
}

void satsched_generate_params_default(satsched_generate_params* p) {
  if (p == nullptr) return;
  const satsched::GenerateParams d;
  p->kind = SATSCHED_KIND_EDSSP;
  p->n_satellites = d.n_satellites;
  p->n_tasks = d.n_tasks;
  p->n_windows_per_task = d.n_windows_per_task;
  p->separable_fraction = d.separable_fraction;
  p->horizon_s = d.horizon_s;
  p->seed = d.seed;
  p->orbits_per_satellite = d.orbits_per_satellite;
  p->min_duration_s = d.min_duration_s;
  p->max_duration_s = d.max_duration_s;
}

satsched_status satsched_scenario_load(const char* path,
                                       satsched_scenario** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new satsched_scenario{
        satsched::io::ParseScenario(satsched::io::ReadFile(path))};
    return SATSCHED_OK;
  });
}

satsched_status satsched_scenario_parse(const char* json,
                                        satsched_scenario** out) {
  return Guard([&] {
    Require(json, "json");
    Require(out, "out");
    *out = new satsched_scenario{satsched::io::ParseScenario(json)};
    return SATSCHED_OK;
  });
}

satsched_status satsched_scenario_generate(
    const satsched_generate_params* params, satsched_scenario** out) {
  return Guard([&] {
    Require(params, "params");
    Require(out, "out");
    *out = new satsched_scenario{satsched::GenerateScenario(
        ToKind(params->kind), ToParams(params))};
    return SATSCHED_OK;
  });
}

satsched_status satsched_scenario_save(const satsched_scenario* s,
                                       const char* path) {
  return Guard([&] {
    Require(s, "scenario");
    Require(path, "path");
    satsched::io::WriteFile(path, satsched::io::SerializeScenario(s->scenario));
    return SATSCHED_OK;
  });
}

satsched_status satsched_scenario_to_json(const satsched_scenario* s,
                                          char** out) {
  return Guard([&] {
    Require(s, "scenario");
    Require(out, "out");
    *out = CopyString(satsched::io::SerializeScenario(s->scenario));
    return SATSCHED_OK;
  });
}

satsched_kind satsched_scenario_kind(const satsched_scenario* s) {
  return s != nullptr && s->scenario.kind == satsched::ProblemKind::kMsjopp
             ? SATSCHED_KIND_MSJOPP
             : SATSCHED_KIND_EDSSP;
}

size_t satsched_scenario_task_count(const satsched_scenario* s) {
  return s == nullptr ? 0 : s->scenario.task_count();
}

void satsched_scenario_free(satsched_scenario* s) { delete s; }

satsched_status satsched_solve(const satsched_scenario* s,
                               const satsched_solver_config* c,
                               satsched_result** out) {
  return Guard([&] {
    Require(s, "scenario");
    Require(out, "out");
    const satsched::rl_ea::Config config = ToConfig(c);
    satsched::SolveResult solved = satsched::Solve(s->scenario, config);
    auto* r = new satsched_result;
    r->file.method =
        config.policy == satsched::rl_ea::SelectionPolicy::kQLearning
            ? "rl-ea"
            : "baseline";
    r->file.solution = std::move(solved.solution);
    r->file.violations = satsched::CheckSolution(s->scenario, r->file.solution);
    r->file.config = config;
    r->file.stats = {solved.run.generations, solved.run.best_generation, 0};
    r->file.scenario = s->scenario;
    r->trace = std::move(solved.run.trace);
    r->has_trace = true;
    *out = r;
    return SATSCHED_OK;
  });
}

satsched_status satsched_oracle(const satsched_scenario* s,
                                satsched_result** out) {
  return Guard([&] {
    Require(s, "scenario");
    Require(out, "out");
    auto r = std::make_unique<satsched_result>();
    satsched::Solution& sol = r->file.solution;
    sol.kind = s->scenario.kind;
    if (sol.kind == satsched::ProblemKind::kEdssp) {
      auto found = satsched::oracle::BruteForceEdssp(s->scenario);
      sol.edssp = std::move(found.best_schedule);
      r->file.stats.nodes_explored = found.nodes_explored;
    } else {
      auto found = satsched::oracle::BruteForceMsjopp(s->scenario);
      sol.msjopp = std::move(found.best_schedule);
      r->file.stats.nodes_explored = found.nodes_explored;
    }
    sol.objective = satsched::SolutionObjective(s->scenario, sol);
    r->file.method = "oracle";
    r->file.violations = satsched::CheckSolution(s->scenario, sol);
    r->file.scenario = s->scenario;
    *out = r.release();
    return SATSCHED_OK;
  });
}

satsched_status satsched_result_load(const char* path, satsched_result** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new satsched_result{
        satsched::io::ParseResult(satsched::io::ReadFile(path)), {}, false};
    return SATSCHED_OK;
  });
}

satsched_status satsched_result_parse(const char* json, satsched_result** out) {
  return Guard([&] {
    Require(json, "json");
    Require(out, "out");
    *out = new satsched_result{satsched::io::ParseResult(json), {}, false};
    return SATSCHED_OK;
  });
}

satsched_status satsched_result_to_json(const satsched_result* r,
                                        const char* trace_ref, char** out) {
  return Guard([&] {
    Require(r, "result");
    Require(out, "out");
    satsched::io::ResultFile file = r->file;
    if (trace_ref != nullptr) file.trace = trace_ref;
    *out = CopyString(satsched::io::SerializeResult(file));
    return SATSCHED_OK;
  });
}

satsched_status satsched_result_save(const satsched_result* r,
                                     const char* path, const char* trace_ref) {
  return Guard([&] {
    Require(r, "result");
    Require(path, "path");
    satsched::io::ResultFile file = r->file;
    if (trace_ref != nullptr) file.trace = trace_ref;
    satsched::io::WriteFile(path, satsched::io::SerializeResult(file));
    return SATSCHED_OK;
  });
}

double satsched_result_objective(const satsched_result* r) {
  return r == nullptr ? 0.0 : r->file.solution.objective;
}

size_t satsched_result_assignment_count(const satsched_result* r) {
  if (r == nullptr) return 0;
  const satsched::Solution& sol = r->file.solution;
  return sol.kind == satsched::ProblemKind::kEdssp
             ? sol.edssp.assignments.size()
             : sol.msjopp.assignments.size();
}

satsched_status satsched_result_write_trace_csv(const satsched_result* r,
                                                const char* path) {
  return Guard([&] {
    Require(r, "result");
    Require(path, "path");
    if (!r->has_trace) throw InputError("result carries no search trace");
    satsched::io::WriteFile(path, satsched::io::TraceCsv(r->trace));
    return SATSCHED_OK;
  });
}

satsched_status satsched_result_write_gantt(const satsched_result* r,
                                            const char* path) {
  return Guard([&] {
    Require(r, "result");
    Require(path, "path");
    satsched::io::WriteFile(
        path, satsched::io::GanttSvg(r->file.scenario, r->file.solution));
    return SATSCHED_OK;
  });
}

void satsched_result_free(satsched_result* r) { delete r; }

satsched_status satsched_check(const satsched_scenario* scenario,
                               const satsched_result* r, char** report) {
  return Guard([&] {
    Require(r, "result");
    return Report(CheckResult(scenario ? &scenario->scenario : nullptr, r->file),
                  false, report);
  });
}

satsched_status satsched_check_json(const satsched_scenario* scenario,
                                    const satsched_result* r, char** report) {
  return Guard([&] {
    Require(r, "result");
    return Report(CheckResult(scenario ? &scenario->scenario : nullptr, r->file),
                  true, report);
  });
}

satsched_status satsched_scenario_validate_file(const char* path,
                                                char** report) {
  return Guard([&] {
    Require(path, "path");
    const satsched::Scenario s =
        satsched::io::ParseScenarioUnchecked(satsched::io::ReadFile(path));
    return Report(satsched::ValidateScenario(s), false, report);
  });
}

satsched_status satsched_bench_generated(const satsched_generate_params* params,
                                         uint64_t first_seed, size_t count,
                                         const satsched_solver_config* c,
                                         int as_json, char** out) {
  return Guard([&] {
    Require(params, "params");
    std::vector<std::uint64_t> seeds;
    for (size_t i = 0; i < count; ++i) seeds.push_back(first_seed + i);
    return Bench(satsched::bench::GenerateSuite(ToKind(params->kind),
                                                ToParams(params), seeds),
                 c, as_json, out);
  });
}

satsched_status satsched_bench_files(const char* const* paths, size_t count,
                                     const satsched_solver_config* c,
                                     int as_json, char** out) {
  return Guard([&] {
    if (count > 0) Require(paths, "paths");
    std::vector<satsched::bench::Instance> suite;
    for (size_t i = 0; i < count; ++i) {
      Require(paths[i], "path");
      suite.push_back({paths[i], satsched::io::ParseScenario(
                                     satsched::io::ReadFile(paths[i]))});
    }
    return Bench(suite, c, as_json, out);
  });
}

}  // extern "C"
