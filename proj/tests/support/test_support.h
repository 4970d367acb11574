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

#ifndef SATSCHED_TESTS_SUPPORT_TEST_SUPPORT_H_
#define SATSCHED_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "satsched/edssp.h"
#include "satsched/generate.h"
#include "satsched/msjopp.h"
#include "satsched/scenario.h"

namespace satsched::testing {

using Rng = std::mt19937_64;

// J_n(u) from `terms` terms of the ascending series, summed with 50 decimal
// digits.
double BesselSeriesReference(int order, double u, int terms);

// Generator parameters drawn at random over a broad range of sizes.
GenerateParams RandomParams(ProblemKind kind, Rng& rng);

std::vector<int> RandomPermutation(int n, Rng& rng);

// A copy of a valid schedule (and possibly its scenario) perturbed so that
// exactly the `target` constraint is broken by construction. Other
// constraints may break as a side effect.
struct EdsspMutant {
  Scenario scenario;
  edssp::Schedule schedule;
  ConstraintId target;
};
struct MsjoppMutant {
  Scenario scenario;
  msjopp::Schedule schedule;
  ConstraintId target;
};

std::vector<ConstraintId> EdsspMutationTargets();
std::vector<ConstraintId> MsjoppMutationTargets();

// nullopt when the schedule offers nothing to mutate towards `target`.
std::optional<EdsspMutant> MutateEdssp(const Scenario& scenario,
                                       const edssp::Schedule& schedule,
                                       ConstraintId target, Rng& rng);
std::optional<MsjoppMutant> MutateMsjopp(const Scenario& scenario,
                                         const msjopp::Schedule& schedule,
                                         ConstraintId target, Rng& rng);

}  // namespace satsched::testing

#endif  // SATSCHED_TESTS_SUPPORT_TEST_SUPPORT_H_
