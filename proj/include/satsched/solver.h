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

#ifndef SATSCHED_SOLVER_H_
#define SATSCHED_SOLVER_H_

#include "satsched/edssp.h"
#include "satsched/msjopp.h"
#include "satsched/rl_ea.h"
#include "satsched/scenario.h"

namespace satsched {

class EdsspProblem : public rl_ea::ProblemAdapter {
 public:
  explicit EdsspProblem(const Scenario& scenario) : decoder_(scenario) {}
  int task_count() const override { return decoder_.task_count(); }
  double Evaluate(std::span<const int> permutation) const override {
    return decoder_.Evaluate(permutation);
  }
  const edssp::Decoder& decoder() const { return decoder_; }

 private:
  edssp::Decoder decoder_;
};

class MsjoppProblem : public rl_ea::ProblemAdapter {
 public:
  explicit MsjoppProblem(const Scenario& scenario) : decoder_(scenario) {}
  int task_count() const override { return decoder_.task_count(); }
  double Evaluate(std::span<const int> permutation) const override {
    return decoder_.Evaluate(permutation);
  }
  const msjopp::Decoder& decoder() const { return decoder_; }

 private:
  msjopp::Decoder decoder_;
};

// A schedule of either kind together with its objective.
struct Solution {
  ProblemKind kind = ProblemKind::kEdssp;
  edssp::Schedule edssp;
  msjopp::Schedule msjopp;
  double objective = 0.0;
};

std::vector<Violation> CheckSolution(const Scenario& scenario,
                                     const Solution& solution);
double SolutionObjective(const Scenario& scenario, const Solution& solution);

struct SolveResult {
  Solution solution;
  rl_ea::RunResult run;
};

// Runs the RL-EA on the scenario and decodes the best permutation found.
SolveResult Solve(const Scenario& scenario, const rl_ea::Config& config);

}  // namespace satsched

#endif  // SATSCHED_SOLVER_H_
