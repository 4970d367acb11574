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

// satsched command-line front end. Talks to the library only through the C
// API, so it doubles as a smoke test of that surface.
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "satsched/c_api.h"

namespace {

struct SolverFlags {
  satsched_solver_config config{};
  bool baseline = false;
};

void AddSolverFlags(CLI::App* cmd, SolverFlags& f) {
  satsched_solver_config_default(&f.config);
  cmd->add_option("--seed", f.config.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--generations", f.config.max_generations,
                  "generation budget")
      ->capture_default_str();
  cmd->add_option("--pop-size", f.config.population_size, "population size")
      ->capture_default_str();
  cmd->add_option("--alpha", f.config.alpha, "Q-learning rate")
      ->capture_default_str();
  cmd->add_option("--gamma", f.config.gamma, "Q-learning discount")
      ->capture_default_str();
  cmd->add_option("--epsilon", f.config.epsilon, "initial exploration rate")
      ->capture_default_str();
  cmd->add_option("--control-t", f.config.control_t,
                  "generations between epsilon decays")
      ->capture_default_str();
  cmd->add_option("--time-limit", f.config.time_limit_s,
                  "wall-clock budget in seconds (0 = none; breaks determinism)")
      ->capture_default_str();
  cmd->add_flag("--baseline", f.baseline,
                "uniform random operator choice instead of Q-learning");
}

int Error(satsched_status status) {
  std::fprintf(stderr, "error: %s\n", satsched_last_error());
  return status;
}

// Prints and frees a library-owned string.
void Emit(char* text, FILE* stream = stdout) {
  if (text != nullptr) {
    std::fputs(text, stream);
    satsched_string_free(text);
  }
}

int WriteOrPrint(const std::string& out, char* text) {
  if (out.empty()) {
    Emit(text);
    return 0;
  }
  FILE* f = std::fopen(out.c_str(), "wb");
  if (f == nullptr) {
    satsched_string_free(text);
    std::fprintf(stderr, "error: cannot write %s\n", out.c_str());
    return SATSCHED_BAD_INPUT;
  }
  std::fputs(text, f);
  std::fclose(f);
  satsched_string_free(text);
  return 0;
}

struct Scoped {
  satsched_scenario* scenario = nullptr;
  satsched_result* result = nullptr;
  ~Scoped() {
    satsched_scenario_free(scenario);
    satsched_result_free(result);
  }
};

satsched_kind KindFromName(const std::string& name) {
  return name == "msjopp" ? SATSCHED_KIND_MSJOPP : SATSCHED_KIND_EDSSP;
}

// Result JSON to --out (or stdout) and the trace next to it.
int SaveResult(satsched_result* result, const std::string& out,
               std::string trace) {
  if (trace.empty() && !out.empty()) {
    std::filesystem::path p(out);
    trace = (p.parent_path() / (p.stem().string() + ".trace.csv")).string();
  }
  std::string ref;
  if (!trace.empty()) {
    if (satsched_status st = satsched_result_write_trace_csv(result, trace.c_str())) {
      return Error(st);
    }
    ref = std::filesystem::path(trace).filename().string();
  }
  char* json = nullptr;
  if (satsched_status st = satsched_result_to_json(
          result, ref.empty() ? nullptr : ref.c_str(), &json)) {
    return Error(st);
  }
  return WriteOrPrint(out, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Satellite scheduling with a Q-learning guided evolutionary search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(satsched_version()));

  // generate
  satsched_generate_params gen{};
  satsched_generate_params_default(&gen);
  std::string gen_kind = "edssp";
  std::string gen_out;
  CLI::App* generate = app.add_subcommand("generate", "write a random scenario");
  generate->add_option("--kind", gen_kind, "edssp or msjopp")
      ->check(CLI::IsMember({"edssp", "msjopp"}))
      ->capture_default_str();
  generate->add_option("--seed", gen.seed)->capture_default_str();
  generate->add_option("--satellites", gen.n_satellites)->capture_default_str();
  generate->add_option("--tasks", gen.n_tasks)->capture_default_str();
  generate->add_option("--windows", gen.n_windows_per_task,
                       "visible windows per task")
      ->capture_default_str();
  generate->add_option("--separable-fraction", gen.separable_fraction)
      ->capture_default_str();
  generate->add_option("--horizon", gen.horizon_s, "seconds")
      ->capture_default_str();
  generate->add_option("--orbits", gen.orbits_per_satellite)
      ->capture_default_str();
  generate->add_option("--min-duration", gen.min_duration_s)
      ->capture_default_str();
  generate->add_option("--max-duration", gen.max_duration_s)
      ->capture_default_str();
  generate->add_option("--out", gen_out, "output path (default stdout)");

  // solve
  SolverFlags solve_flags;
  std::string solve_scenario, solve_out, solve_trace;
  CLI::App* solve = app.add_subcommand("solve", "run the RL-EA on a scenario");
  solve->add_option("--scenario", solve_scenario)->required();
  solve->add_option("--out", solve_out,
                    "result JSON (default stdout); the trace goes to "
                    "<stem>.trace.csv beside it");
  solve->add_option("--trace", solve_trace, "trace CSV path");
  AddSolverFlags(solve, solve_flags);

  // check
  std::string check_result, check_scenario, check_format = "text";
  CLI::App* check = app.add_subcommand(
      "check", "verify a result (or validate a bare scenario)");
  check->add_option("--result", check_result, "result JSON");
  check->add_option("--scenario", check_scenario,
                    "scenario to check against (default: the embedded one)");
  check->add_option("--format", check_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // oracle
  std::string oracle_scenario, oracle_out;
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search on a small scenario");
  oracle->add_option("--scenario", oracle_scenario)->required();
  oracle->add_option("--out", oracle_out, "result JSON (default stdout)");

  // bench
  SolverFlags bench_flags;
  satsched_generate_params bench_gen{};
  satsched_generate_params_default(&bench_gen);
  std::string bench_kind = "edssp", bench_out, bench_format = "csv";
  std::vector<std::string> bench_files;
  std::size_t bench_instances = 10;
  std::uint64_t bench_first_seed = 1;
  CLI::App* bench = app.add_subcommand(
      "bench", "compare RL-EA, the uniform baseline and the oracle");
  bench->add_option("--scenario", bench_files,
                    "scenario files (default: a generated suite)");
  bench->add_option("--kind", bench_kind)
      ->check(CLI::IsMember({"edssp", "msjopp"}))
      ->capture_default_str();
  bench->add_option("--instances", bench_instances)->capture_default_str();
  bench->add_option("--first-seed", bench_first_seed,
                    "generator seed of the first instance")
      ->capture_default_str();
  bench->add_option("--satellites", bench_gen.n_satellites)
      ->capture_default_str();
  bench->add_option("--tasks", bench_gen.n_tasks)->capture_default_str();
  bench->add_option("--windows", bench_gen.n_windows_per_task)
      ->capture_default_str();
  bench->add_option("--horizon", bench_gen.horizon_s)->capture_default_str();
  bench->add_option("--format", bench_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bench->add_option("--out", bench_out, "output path (default stdout)");
  AddSolverFlags(bench, bench_flags);

  // gantt
  std::string gantt_result, gantt_out;
  CLI::App* gantt = app.add_subcommand("gantt", "render a result as SVG");
  gantt->add_option("--result", gantt_result)->required();
  gantt->add_option("--out", gantt_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : SATSCHED_BAD_INPUT;
  }

  Scoped h;
  if (generate->parsed()) {
    gen.kind = KindFromName(gen_kind);
    if (gen.kind == SATSCHED_KIND_MSJOPP) gen.orbits_per_satellite = 1;
    if (satsched_status st = satsched_scenario_generate(&gen, &h.scenario)) {
      return Error(st);
    }
    char* json = nullptr;
    if (satsched_status st = satsched_scenario_to_json(h.scenario, &json)) {
      return Error(st);
    }
    return WriteOrPrint(gen_out, json);
  }

  if (solve->parsed()) {
    if (satsched_status st =
            satsched_scenario_load(solve_scenario.c_str(), &h.scenario)) {
      return Error(st);
    }
    solve_flags.config.uniform_policy = solve_flags.baseline ? 1 : 0;
    if (satsched_status st =
            satsched_solve(h.scenario, &solve_flags.config, &h.result)) {
      return Error(st);
    }
    if (int rc = SaveResult(h.result, solve_out, solve_trace)) return rc;
    char* report = nullptr;
    const satsched_status st = satsched_check(nullptr, h.result, &report);
    Emit(report, stderr);
    return st;
  }

  if (check->parsed()) {
    char* report = nullptr;
    satsched_status st;
    if (check_result.empty()) {
      if (check_scenario.empty()) {
        std::fprintf(stderr, "error: check needs --result or --scenario\n");
        return SATSCHED_BAD_INPUT;
      }
      st = satsched_scenario_validate_file(check_scenario.c_str(), &report);
    } else {
      if (satsched_status s =
              satsched_result_load(check_result.c_str(), &h.result)) {
        return Error(s);
      }
      if (!check_scenario.empty()) {
        if (satsched_status s =
                satsched_scenario_load(check_scenario.c_str(), &h.scenario)) {
          return Error(s);
        }
      }
      st = check_format == "json"
               ? satsched_check_json(h.scenario, h.result, &report)
               : satsched_check(h.scenario, h.result, &report);
    }
    if (st > SATSCHED_VIOLATIONS) return Error(st);
    Emit(report);
    return st;
  }

  if (oracle->parsed()) {
    if (satsched_status st =
            satsched_scenario_load(oracle_scenario.c_str(), &h.scenario)) {
      return Error(st);
    }
    if (satsched_status st = satsched_oracle(h.scenario, &h.result)) {
      return Error(st);
    }
    char* json = nullptr;
    if (satsched_status st = satsched_result_to_json(h.result, nullptr, &json)) {
      return Error(st);
    }
    return WriteOrPrint(oracle_out, json);
  }

  if (bench->parsed()) {
    bench_flags.config.uniform_policy = 0;
    const int as_json = bench_format == "json";
    char* table = nullptr;
    satsched_status st;
    if (!bench_files.empty()) {
      std::vector<const char*> paths;
      for (const std::string& f : bench_files) paths.push_back(f.c_str());
      st = satsched_bench_files(paths.data(), paths.size(), &bench_flags.config,
                                as_json, &table);
    } else {
      bench_gen.kind = KindFromName(bench_kind);
      if (bench_gen.kind == SATSCHED_KIND_MSJOPP) {
        bench_gen.orbits_per_satellite = 1;
      }
      st = satsched_bench_generated(&bench_gen, bench_first_seed,
                                    bench_instances, &bench_flags.config,
                                    as_json, &table);
    }
    if (st != SATSCHED_OK) return Error(st);
    return WriteOrPrint(bench_out, table);
  }

  if (gantt->parsed()) {
    if (satsched_status st =
            satsched_result_load(gantt_result.c_str(), &h.result)) {
      return Error(st);
    }
    if (satsched_status st =
            satsched_result_write_gantt(h.result, gantt_out.c_str())) {
      return Error(st);
    }
    return 0;
  }
  return SATSCHED_INTERNAL_ERROR;
}
