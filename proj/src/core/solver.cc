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

#include "satsched/solver.h"

namespace satsched {

std::vector<Violation> CheckSolution(const Scenario& scenario,
                                     const Solution& solution) {
  if (solution.kind != scenario.kind) {
    return {{ConstraintId::kScenario, {"result"},
             "schedule kind does not match scenario kind"}};
  }
  return scenario.kind == ProblemKind::kEdssp
             ? edssp::CheckSchedule(scenario, solution.edssp)
             : msjopp::CheckSchedule(scenario, solution.msjopp);
}

double SolutionObjective(const Scenario& scenario, const Solution& solution) {
  return scenario.kind == ProblemKind::kEdssp
             ? edssp::ObjectiveValue(scenario, solution.edssp)
             : msjopp::ObjectiveValue(scenario, solution.msjopp);
}

SolveResult Solve(const Scenario& scenario, const rl_ea::Config& config) {
  config.Validate();
  SolveResult out;
  out.solution.kind = scenario.kind;
  if (scenario.kind == ProblemKind::kEdssp) {
    const EdsspProblem problem(scenario);
    out.run = rl_ea::Run(problem, config);
    out.solution.edssp = problem.decoder().Decode(out.run.best_permutation);
  } else {
    const MsjoppProblem problem(scenario);
    out.run = rl_ea::Run(problem, config);
    out.solution.msjopp = problem.decoder().Decode(out.run.best_permutation);
  }
  out.solution.objective = SolutionObjective(scenario, out.solution);
  return out;
}

}  // namespace satsched
