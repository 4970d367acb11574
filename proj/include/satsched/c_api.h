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

#ifndef SATSCHED_C_API_H_
#define SATSCHED_C_API_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SATSCHED_API __declspec(dllexport)
#else
#define SATSCHED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum satsched_status {
  SATSCHED_OK = 0,
  SATSCHED_VIOLATIONS = 1,
  SATSCHED_BAD_INPUT = 2,
  SATSCHED_INTERNAL_ERROR = 3
} satsched_status;

typedef enum satsched_kind {
  SATSCHED_KIND_EDSSP = 0,
  SATSCHED_KIND_MSJOPP = 1
} satsched_kind;

typedef struct satsched_scenario satsched_scenario;
typedef struct satsched_result satsched_result;

typedef struct satsched_solver_config {
  int32_t population_size;
  double alpha;
  double gamma;
  double epsilon;
  int32_t control_t;
  int32_t max_generations;
  uint64_t seed;
  double time_limit_s; /* 0 = none */
  int32_t uniform_policy; /* nonzero: uniform operator choice (baseline) */
} satsched_solver_config;

typedef struct satsched_generate_params {
  satsched_kind kind;
  int32_t n_satellites;
  int32_t n_tasks;
  int32_t n_windows_per_task;
  double separable_fraction;
  int64_t horizon_s;
  uint64_t seed;
  int32_t orbits_per_satellite;
  int64_t min_duration_s;
  int64_t max_duration_s;
} satsched_generate_params;

SATSCHED_API const char* satsched_version(void);

/* Message of the last failed call on this thread; "" if none. */
SATSCHED_API const char* satsched_last_error(void);

/* Frees strings returned through char** out-parameters. */
SATSCHED_API void satsched_string_free(char* s);

SATSCHED_API void satsched_solver_config_default(satsched_solver_config* c);
SATSCHED_API void satsched_generate_params_default(satsched_generate_params* p);

/* ---- scenarios ---- */
SATSCHED_API satsched_status satsched_scenario_load(const char* path,
                                                    satsched_scenario** out);
SATSCHED_API satsched_status satsched_scenario_parse(const char* json,
                                                     satsched_scenario** out);
SATSCHED_API satsched_status satsched_scenario_generate(
    const satsched_generate_params* params, satsched_scenario** out);
SATSCHED_API satsched_status satsched_scenario_save(
    const satsched_scenario* s, const char* path);
SATSCHED_API satsched_status satsched_scenario_to_json(
    const satsched_scenario* s, char** out);
SATSCHED_API satsched_kind satsched_scenario_kind(const satsched_scenario* s);
SATSCHED_API size_t satsched_scenario_task_count(const satsched_scenario* s);
SATSCHED_API void satsched_scenario_free(satsched_scenario* s);

/* ---- solving ---- */
SATSCHED_API satsched_status satsched_solve(const satsched_scenario* s,
                                            const satsched_solver_config* c,
                                            satsched_result** out);
/* Exhaustive search; SATSCHED_BAD_INPUT when the instance is too large. */
SATSCHED_API satsched_status satsched_oracle(const satsched_scenario* s,
                                             satsched_result** out);

/* ---- results ---- */
SATSCHED_API satsched_status satsched_result_load(const char* path,
                                                  satsched_result** out);
SATSCHED_API satsched_status satsched_result_parse(const char* json,
                                                   satsched_result** out);
/* `trace_ref` (nullable) is stored as the result's trace reference. */
SATSCHED_API satsched_status satsched_result_save(const satsched_result* r,
                                                  const char* path,
                                                  const char* trace_ref);
SATSCHED_API satsched_status satsched_result_to_json(const satsched_result* r,
                                                     const char* trace_ref,
                                                     char** out);
SATSCHED_API double satsched_result_objective(const satsched_result* r);
SATSCHED_API size_t satsched_result_assignment_count(const satsched_result* r);
SATSCHED_API satsched_status satsched_result_write_trace_csv(
    const satsched_result* r, const char* path);
SATSCHED_API satsched_status satsched_result_write_gantt(
    const satsched_result* r, const char* path);
SATSCHED_API void satsched_result_free(satsched_result* r);

/* Re-checks the result's schedule against `scenario`, or against the
   embedded scenario when `scenario` is NULL, and compares the recorded
   objective. `report` (nullable) receives one violation per line as
   "<constraint_id> <entities> <message>". Returns SATSCHED_VIOLATIONS when
   any line was produced. */
SATSCHED_API satsched_status satsched_check(const satsched_scenario* scenario,
                                            const satsched_result* r,
                                            char** report);
/* Same, with the violations as a JSON array. */
SATSCHED_API satsched_status satsched_check_json(
    const satsched_scenario* scenario, const satsched_result* r,
    char** report);

/* Validates a scenario without rejecting it; report as in satsched_check. */
SATSCHED_API satsched_status satsched_scenario_validate_file(const char* path,
                                                             char** report);

/* ---- benchmark ---- */
/* Output is CSV, or a JSON array of row objects when `as_json` is nonzero. */
/* Generated suite: one instance per seed in [first_seed, first_seed+count). */
SATSCHED_API satsched_status satsched_bench_generated(
    const satsched_generate_params* params, uint64_t first_seed, size_t count,
    const satsched_solver_config* c, int as_json, char** out);
/* Suite of scenario files; the instance id is the file path. */
SATSCHED_API satsched_status satsched_bench_files(
    const char* const* paths, size_t count, const satsched_solver_config* c,
    int as_json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SATSCHED_C_API_H_ */
