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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "satsched/c_api.h"

namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("satsched_capi_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

satsched_scenario* Generate(satsched_kind kind, int tasks) {
  satsched_generate_params p;
  satsched_generate_params_default(&p);
  p.kind = kind;
  p.n_tasks = tasks;
  p.horizon_s = 600;
  if (kind == SATSCHED_KIND_MSJOPP) p.orbits_per_satellite = 1;
  satsched_scenario* s = nullptr;
  EXPECT_EQ(satsched_scenario_generate(&p, &s), SATSCHED_OK);
  return s;
}

satsched_solver_config Quick() {
  satsched_solver_config c;
  satsched_solver_config_default(&c);
  c.max_generations = 20;
  c.population_size = 8;
  return c;
}

TEST(CApi, Defaults) {
  satsched_solver_config c;
  satsched_solver_config_default(&c);
  EXPECT_EQ(c.population_size, 30);
  EXPECT_EQ(c.alpha, 0.5);
  EXPECT_EQ(c.gamma, 0.5);
  EXPECT_EQ(c.epsilon, 0.5);
  EXPECT_EQ(c.control_t, 10);
  EXPECT_STRNE(satsched_version(), "");
}

TEST(CApi, SolveCheckAndReload) {
  satsched_scenario* s = Generate(SATSCHED_KIND_EDSSP, 8);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(satsched_scenario_kind(s), SATSCHED_KIND_EDSSP);
  EXPECT_EQ(satsched_scenario_task_count(s), 8u);
  satsched_solver_config c = Quick();
  satsched_result* r = nullptr;
  ASSERT_EQ(satsched_solve(s, &c, &r), SATSCHED_OK);
  EXPECT_GT(satsched_result_objective(r), 0.0);
  char* report = nullptr;
  EXPECT_EQ(satsched_check(nullptr, r, &report), SATSCHED_OK);
  EXPECT_STREQ(report, "");
  satsched_string_free(report);

  char* json = nullptr;
  ASSERT_EQ(satsched_result_to_json(r, "t.csv", &json), SATSCHED_OK);
  satsched_result* back = nullptr;
  ASSERT_EQ(satsched_result_parse(json, &back), SATSCHED_OK);
  EXPECT_EQ(satsched_result_objective(back), satsched_result_objective(r));
  EXPECT_EQ(satsched_result_assignment_count(back),
            satsched_result_assignment_count(r));
  EXPECT_EQ(satsched_check(s, back, nullptr), SATSCHED_OK);
  satsched_string_free(json);
  satsched_result_free(back);
  satsched_result_free(r);
  satsched_scenario_free(s);
}

TEST(CApi, TamperedObjectiveIsAViolation) {
  satsched_scenario* s = Generate(SATSCHED_KIND_MSJOPP, 6);
  satsched_solver_config c = Quick();
  satsched_result* r = nullptr;
  ASSERT_EQ(satsched_solve(s, &c, &r), SATSCHED_OK);
  char* json = nullptr;
  ASSERT_EQ(satsched_result_to_json(r, nullptr, &json), SATSCHED_OK);
  std::string text(json);
  satsched_string_free(json);
  const std::string key = "\"objective\": ";
  const auto at = text.find(key);
  ASSERT_NE(at, std::string::npos);
  text.insert(at + key.size(), "1000");
  satsched_result* bad = nullptr;
  ASSERT_EQ(satsched_result_parse(text.c_str(), &bad), SATSCHED_OK);
  char* report = nullptr;
  EXPECT_EQ(satsched_check(nullptr, bad, &report), SATSCHED_VIOLATIONS);
  EXPECT_NE(std::string(report).find("objective"), std::string::npos);
  satsched_string_free(report);
  satsched_result_free(bad);
  satsched_result_free(r);
  satsched_scenario_free(s);
}

TEST(CApi, Errors) {
  satsched_scenario* s = nullptr;
  EXPECT_EQ(satsched_scenario_parse("{", &s), SATSCHED_BAD_INPUT);
  EXPECT_EQ(s, nullptr);
  EXPECT_STRNE(satsched_last_error(), "");
  EXPECT_EQ(satsched_scenario_load("/nonexistent.json", &s),
            SATSCHED_BAD_INPUT);
  EXPECT_EQ(satsched_scenario_parse(nullptr, &s), SATSCHED_BAD_INPUT);
  EXPECT_EQ(satsched_solve(nullptr, nullptr, nullptr), SATSCHED_BAD_INPUT);

  satsched_scenario* big = Generate(SATSCHED_KIND_EDSSP, 12);
  satsched_result* r = nullptr;
  EXPECT_EQ(satsched_oracle(big, &r), SATSCHED_BAD_INPUT);
  satsched_solver_config c = Quick();
  c.alpha = 2.0;
  EXPECT_EQ(satsched_solve(big, &c, &r), SATSCHED_BAD_INPUT);
  EXPECT_NE(std::string(satsched_last_error()).find("alpha"),
            std::string::npos);

  satsched_scenario_free(nullptr);
  satsched_result_free(nullptr);
  satsched_string_free(nullptr);
  satsched_scenario_free(big);
}

TEST(CApi, OracleHasNoTrace) {
  satsched_scenario* s = Generate(SATSCHED_KIND_EDSSP, 4);
  satsched_result* r = nullptr;
  ASSERT_EQ(satsched_oracle(s, &r), SATSCHED_OK);
  TempDir dir;
  EXPECT_EQ(satsched_result_write_trace_csv(r, (dir / "t.csv").c_str()),
            SATSCHED_BAD_INPUT);
  EXPECT_EQ(satsched_result_write_gantt(r, (dir / "g.svg").c_str()),
            SATSCHED_OK);
  EXPECT_TRUE(fs::exists(dir / "g.svg"));
  satsched_result_free(r);
  satsched_scenario_free(s);
}

TEST(CApi, Bench) {
  satsched_generate_params p;
  satsched_generate_params_default(&p);
  p.n_tasks = 4;
  p.horizon_s = 400;
  satsched_solver_config c = Quick();
  char* out = nullptr;
  ASSERT_EQ(satsched_bench_generated(&p, 1, 2, &c, 0, &out), SATSCHED_OK);
  std::string csv(out);
  satsched_string_free(out);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
}

// CLI exit codes.

std::string CliPath() { return SATSCHED_CLI_PATH; }

int Cli(const std::string& args) {
  const int rc =
      std::system((CliPath() + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(rc);
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  const std::string scen = dir / "s.json";
  const std::string res = dir / "r.json";
  ASSERT_EQ(Cli("generate --tasks 6 --horizon 600 --seed 2 --out " + scen), 0);
  ASSERT_EQ(Cli("solve --scenario " + scen + " --generations 10 --pop-size 6 "
                "--out " + res),
            0);
  EXPECT_TRUE(fs::exists(dir / "r.trace.csv"));
  EXPECT_EQ(Cli("check --result " + res), 0);
  EXPECT_EQ(Cli("check --scenario " + scen), 0);
  EXPECT_EQ(Cli("gantt --result " + res + " --out " + (dir / "g.svg")), 0);
  EXPECT_EQ(Cli("oracle --scenario " + scen + " --out " + (dir / "o.json")),
            0);
  EXPECT_EQ(Cli("check --result " + (dir / "o.json")), 0);

  // Shift every start by one second.
  std::string text = Slurp(res);
  std::string shifted;
  const std::string key = "\"start_s\": ";
  std::size_t pos = 0, at;
  int shifts = 0;
  while ((at = text.find(key, pos)) != std::string::npos) {
    at += key.size();
    shifted += text.substr(pos, at - pos);
    std::size_t end = at;
    while (std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    shifted += std::to_string(std::stoll(text.substr(at, end - at)) - 100000);
    ++shifts;
    pos = end;
  }
  shifted += text.substr(pos);
  ASSERT_GT(shifts, 0);
  std::ofstream(dir / "bad.json") << shifted;
  EXPECT_EQ(Cli("check --result " + (dir / "bad.json")), 1);

  EXPECT_EQ(Cli("check --result " + (dir / "missing.json")), 2);
  std::ofstream(dir / "junk.json") << "{\"version\": 1}";
  EXPECT_EQ(Cli("solve --scenario " + (dir / "junk.json")), 2);
  EXPECT_EQ(Cli("solve --scenario " + scen + " --alpha 7"), 2);
  EXPECT_EQ(Cli("frobnicate"), 2);
  EXPECT_EQ(Cli("solve"), 2);
  EXPECT_EQ(Cli("bench --instances 1 --tasks 4 --generations 5 --pop-size 4 "
                "--format json --out " + (dir / "b.json")),
            0);
}

}  // namespace
