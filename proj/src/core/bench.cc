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

#include "satsched/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "satsched/io.h"
#include "satsched/oracle.h"
#include "satsched/solver.h"

namespace satsched::bench {

namespace {

using Clock = std::chrono::steady_clock;

Row Timed(const std::string& id, const std::string& method,
          const std::function<void(Row&)>& body) {
  Row row;
  row.instance_id = id;
  row.method = method;
  const Clock::time_point t0 = Clock::now();
  try {
    body(row);
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  row.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
  return row;
}

bool OracleFits(const Scenario& s) {
  const int limit = s.kind == ProblemKind::kEdssp ? oracle::kEdsspMaxTasks
                                                  : oracle::kMsjoppMaxTasks;
  return static_cast<int>(s.task_count()) <= limit;
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<Instance> GenerateSuite(ProblemKind kind,
                                    const GenerateParams& params,
                                    const std::vector<std::uint64_t>& seeds) {
  std::vector<Instance> out;
  for (std::uint64_t seed : seeds) {
    GenerateParams p = params;
    p.seed = seed;
    out.push_back({std::string(ProblemKindName(kind)) + "-s" +
                       std::to_string(seed),
                   GenerateScenario(kind, p)});
  }
  return out;
}

std::vector<Row> RunBenchmark(const std::vector<Instance>& instances,
                              const rl_ea::Config& config) {
  config.Validate();
  std::vector<Row> rows;
  for (const Instance& inst : instances) {
    std::vector<Row> mine;
    for (const auto policy : {rl_ea::SelectionPolicy::kQLearning,
                              rl_ea::SelectionPolicy::kUniform}) {
      rl_ea::Config c = config;
      c.policy = policy;
      const char* method =
          policy == rl_ea::SelectionPolicy::kQLearning ? "rl-ea" : "baseline";
      mine.push_back(Timed(inst.id, method, [&](Row& row) {
        const SolveResult r = Solve(inst.scenario, c);
        row.objective = r.solution.objective;
        row.generations = r.run.generations;
      }));
    }
    if (OracleFits(inst.scenario)) {
      mine.push_back(Timed(inst.id, "oracle", [&](Row& row) {
        row.objective =
            inst.scenario.kind == ProblemKind::kEdssp
                ? oracle::BruteForceEdssp(inst.scenario).best_objective
                : oracle::BruteForceMsjopp(inst.scenario).best_objective;
      }));
    }
    double best = 0.0;
    for (const Row& r : mine) {
      if (r.status == "ok") best = std::max(best, r.objective);
    }
    for (Row& r : mine) {
      if (r.status != "ok") {
        r.optimality_gap = 1.0;
      } else if (best > 0.0) {
        r.optimality_gap = (best - r.objective) / best;
      }
      rows.push_back(std::move(r));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.instance_id < b.instance_id;
  });
  return rows;
}

std::string ToCsv(const std::vector<Row>& rows) {
  std::ostringstream out;
  out << "instance_id,method,objective,optimality_gap,generations,"
         "wall_time_s,status\n";
  for (const Row& r : rows) {
    out << CsvField(r.instance_id) << ',' << r.method << ','
        << io::FormatDouble(r.objective) << ','
        << io::FormatDouble(r.optimality_gap) << ',' << r.generations << ','
        << io::FormatDouble(r.wall_time_s) << ',' << CsvField(r.status)
        << '\n';
  }
  return out.str();
}

std::string ToJson(const std::vector<Row>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Row& r : rows) {
    out.push_back({{"instance_id", r.instance_id},
                   {"method", r.method},
                   {"objective", r.objective},
                   {"optimality_gap", r.optimality_gap},
                   {"generations", r.generations},
                   {"wall_time_s", r.wall_time_s},
                   {"status", r.status}});
  }
  return out.dump(2) + "\n";
}

}  // namespace satsched::bench
