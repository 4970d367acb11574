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

#include <algorithm>
#include <regex>

#include <gtest/gtest.h>

#include "json.hpp"
#include "satsched/bench.h"
#include "satsched/generate.h"
#include "satsched/io.h"
#include "satsched/solver.h"
#include "test_support.h"

namespace satsched::io {
namespace {

using nlohmann::json;

std::string ErrorOf(const std::string& text) {
  try {
    ParseScenario(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

Scenario Small(ProblemKind kind, std::uint64_t seed = 3) {
  GenerateParams p;
  p.n_tasks = 4;
  p.seed = seed;
  p.horizon_s = 600;
  if (kind == ProblemKind::kMsjopp) p.orbits_per_satellite = 1;
  return GenerateScenario(kind, p);
}

TEST(ScenarioJson, RoundTrip) {
  testing::Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const ProblemKind kind =
        i % 2 == 0 ? ProblemKind::kEdssp : ProblemKind::kMsjopp;
    Scenario s = GenerateScenario(kind, testing::RandomParams(kind, rng));
    const std::string text = SerializeScenario(s);
    const Scenario back = ParseScenario(text);
    EXPECT_EQ(back, s) << i;
    EXPECT_EQ(SerializeScenario(back), text);
  }
}

TEST(ScenarioJson, Strict) {
  const std::string good = SerializeScenario(Small(ProblemKind::kEdssp));
  ASSERT_EQ(ErrorOf(good), "");

  json doc = json::parse(good);
  doc["extra"] = 1;
  EXPECT_NE(ErrorOf(doc.dump()), "");

  doc = json::parse(good);
  doc["tasks"][0]["est_s"] = 1.5;
  EXPECT_NE(ErrorOf(doc.dump()).find("tasks[0].est_s"), std::string::npos);

  doc = json::parse(good);
  doc["version"] = kFormatVersion + 1;
  EXPECT_NE(ErrorOf(doc.dump()), "");

  doc = json::parse(good);
  doc.erase("horizon");
  EXPECT_NE(ErrorOf(doc.dump()), "");

  EXPECT_NE(ErrorOf("{not json"), "");
}

TEST(ScenarioJson, RejectsInvalidButParsesUnchecked) {
  Scenario s = Small(ProblemKind::kEdssp);
  s.edssp_tasks[0].degree = 150;
  const std::string text = SerializeScenario(s);
  EXPECT_NE(ErrorOf(text).find("degree range"), std::string::npos);
  EXPECT_EQ(ParseScenarioUnchecked(text), s);
}

ResultFile Solved(const Scenario& s, std::uint64_t seed) {
  rl_ea::Config c;
  c.seed = seed;
  c.max_generations = 20;
  c.population_size = 8;
  SolveResult r = Solve(s, c);
  ResultFile f;
  f.method = "rl-ea";
  f.solution = r.solution;
  f.violations = CheckSolution(s, r.solution);
  f.trace = "run.trace.csv";
  f.config = c;
  f.stats = {r.run.generations, r.run.best_generation, 0};
  f.scenario = s;
  return f;
}

TEST(ResultJson, RoundTrip) {
  testing::Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const ProblemKind kind =
        i % 2 == 0 ? ProblemKind::kEdssp : ProblemKind::kMsjopp;
    GenerateParams p = testing::RandomParams(kind, rng);
    p.n_tasks = std::min(p.n_tasks, 10);
    ResultFile f = Solved(GenerateScenario(kind, p), i);
    if (i % 3 == 0) {
      f.trace.reset();
      f.config.reset();
      f.method = "oracle";
    }
    const std::string text = SerializeResult(f);
    ResultFile back = ParseResult(text);
    EXPECT_EQ(SerializeResult(back), text) << i;
    EXPECT_EQ(back.scenario, f.scenario);
    EXPECT_EQ(back.solution.objective, f.solution.objective);
    EXPECT_EQ(back.solution.edssp, f.solution.edssp);
    EXPECT_EQ(back.solution.msjopp, f.solution.msjopp);
    EXPECT_EQ(back.config, f.config);
    EXPECT_EQ(back.stats, f.stats);
  }
}

TEST(ResultJson, SeedMustMatchConfig) {
  const std::string text = SerializeResult(Solved(Small(ProblemKind::kEdssp), 2));
  json doc = json::parse(text);
  ASSERT_EQ(doc["seed"], 2);
  doc["seed"] = 3;
  EXPECT_THROW(ParseResult(doc.dump()), InputError);
}

TEST(Trace, Csv) {
  ResultFile f = Solved(Small(ProblemKind::kEdssp), 4);
  rl_ea::Config c = *f.config;
  EdsspProblem problem(f.scenario);
  rl_ea::RunResult run = rl_ea::Run(problem, c);
  const std::string csv = TraceCsv(run.trace);
  const std::string header =
      "generation,state,action,reward,best_fitness,mean_fitness,epsilon\n";
  ASSERT_EQ(csv.substr(0, header.size()), header);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'),
            static_cast<long>(run.trace.size()) + 1);
  EXPECT_NE(csv.find("\n1,"), std::string::npos);
  EXPECT_EQ(TraceCsv({}), header);
}

TEST(Gantt, OneRectPerAssignment) {
  for (ProblemKind kind : {ProblemKind::kEdssp, ProblemKind::kMsjopp}) {
    ResultFile f = Solved(Small(kind, 8), 1);
    const std::string svg = GanttSvg(f.scenario, f.solution);
    const std::size_t n = kind == ProblemKind::kEdssp
                              ? f.solution.edssp.assignments.size()
                              : f.solution.msjopp.assignments.size();
    ASSERT_GT(n, 0u);
    const std::regex rect("<rect");
    const auto count = std::distance(
        std::sregex_iterator(svg.begin(), svg.end(), rect),
        std::sregex_iterator());
    EXPECT_EQ(static_cast<std::size_t>(count), n);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  }
}

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.123}) {
    EXPECT_EQ(std::stod(FormatDouble(v)), v);
  }
}

TEST(Files, MissingFile) {
  EXPECT_THROW(ReadFile("/nonexistent/x.json"), InputError);
}

TEST(Generate, Deterministic) {
  GenerateParams p;
  p.seed = 17;
  EXPECT_EQ(SerializeScenario(GenerateScenario(ProblemKind::kEdssp, p)),
            SerializeScenario(GenerateScenario(ProblemKind::kEdssp, p)));
  p.n_tasks = 5;
  EXPECT_EQ(GenerateScenario(ProblemKind::kEdssp, p).edssp_tasks.size(), 5u);
  p.orbits_per_satellite = 1;
  EXPECT_EQ(GenerateScenario(ProblemKind::kMsjopp, p).obs_tasks.size(), 5u);
}

TEST(Generate, AlwaysValid) {
  GenerateParams p;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    p.seed = seed;
    p.orbits_per_satellite = 2;
    EXPECT_TRUE(ValidateScenario(GenerateScenario(ProblemKind::kEdssp, p))
                    .empty())
        << seed;
    p.orbits_per_satellite = 1;
    EXPECT_TRUE(ValidateScenario(GenerateScenario(ProblemKind::kMsjopp, p))
                    .empty())
        << seed;
  }
}

TEST(Bench, EmptySuite) {
  auto rows = bench::RunBenchmark({}, rl_ea::Config{});
  EXPECT_TRUE(rows.empty());
  EXPECT_EQ(bench::ToCsv(rows),
            "instance_id,method,objective,optimality_gap,generations,"
            "wall_time_s,status\n");
  EXPECT_EQ(json::parse(bench::ToJson(rows)), json::array());
}

TEST(Bench, SmallInstance) {
  GenerateParams p;
  p.n_tasks = 5;
  p.horizon_s = 400;
  auto suite = bench::GenerateSuite(ProblemKind::kEdssp, p, {7});
  ASSERT_EQ(suite.size(), 1u);
  EXPECT_EQ(suite[0].id, "edssp-s7");
  rl_ea::Config c;
  c.max_generations = 30;
  auto rows = bench::RunBenchmark(suite, c);
  ASSERT_EQ(rows.size(), 3u);
  std::vector<std::string> methods;
  for (const auto& r : rows) {
    methods.push_back(r.method);
    EXPECT_EQ(r.status, "ok");
    EXPECT_GE(r.optimality_gap, 0.0);
    EXPECT_LE(r.optimality_gap, 1.0);
  }
  std::sort(methods.begin(), methods.end());
  EXPECT_EQ(methods, (std::vector<std::string>{"baseline", "oracle", "rl-ea"}));
  json doc = json::parse(bench::ToJson(rows));
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_TRUE(doc[0].contains("optimality_gap"));
}

}  // namespace
}  // namespace satsched::io
