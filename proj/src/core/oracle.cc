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

#include "satsched/oracle.h"

#include <cmath>
#include <optional>
#include <vector>

namespace satsched::oracle {

namespace {

// Depth-first enumeration of task orderings. A task that cannot be placed in
// some partial state cannot be placed in any extension of it, so it is dropped
// from the whole subtree.
template <typename DecoderT>
class Search {
 public:
  using State = typename DecoderT::State;

  explicit Search(const DecoderT& decoder) : decoder_(decoder) {}

  void Run() {
    std::vector<int> remaining(decoder_.task_count());
    for (int t = 0; t < decoder_.task_count(); ++t) remaining[t] = t;
    State root = decoder_.EmptyState();
    best_ = DecoderT::Objective(root);
    best_state_ = root;
    Visit(root, remaining);
  }

  double best() const { return best_; }
  const State& best_state() const { return *best_state_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  void Visit(const State& state, const std::vector<int>& remaining) {
    ++nodes_;
    const double current = DecoderT::Objective(state);
    if (current > best_) {
      best_ = current;
      best_state_ = state;
    }
    std::vector<State> children;
    std::vector<int> placeable;
    for (int task : remaining) {
      State child = state;
      if (decoder_.TryPlace(child, task)) {
        children.push_back(std::move(child));
        placeable.push_back(task);
      }
    }
    double bound = current;
    for (int task : placeable) bound += decoder_.ProfitBound(task);
    if (bound + 1e-9 * (1.0 + std::fabs(bound)) <= best_) return;
    for (std::size_t i = 0; i < placeable.size(); ++i) {
      std::vector<int> rest;
      rest.reserve(placeable.size() - 1);
      for (std::size_t j = 0; j < placeable.size(); ++j) {
        if (j != i) rest.push_back(placeable[j]);
      }
      Visit(children[i], rest);
    }
  }

  const DecoderT& decoder_;
  double best_ = 0.0;
  std::optional<State> best_state_;
  std::int64_t nodes_ = 0;
};

void CheckSize(const Scenario& scenario, int max_tasks) {
  if (static_cast<int>(scenario.task_count()) > max_tasks) {
    throw InputError("instance too large for the oracle: " +
                     std::to_string(scenario.task_count()) + " tasks > " +
                     std::to_string(max_tasks));
  }
}

}  // namespace

OracleResult<edssp::Schedule> BruteForceEdssp(const Scenario& scenario,
                                              int max_tasks) {
  CheckSize(scenario, max_tasks);
  const edssp::Decoder decoder(scenario);
  Search<edssp::Decoder> search(decoder);
  search.Run();
  return {search.best(), decoder.ToSchedule(search.best_state()),
          search.nodes()};
}

OracleResult<msjopp::Schedule> BruteForceMsjopp(const Scenario& scenario,
                                                int max_tasks) {
  CheckSize(scenario, max_tasks);
  const msjopp::Decoder decoder(scenario);
  Search<msjopp::Decoder> search(decoder);
  search.Run();
  return {search.best(), decoder.ToSchedule(search.best_state()),
          search.nodes()};
}

}  // namespace satsched::oracle
