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

#ifndef SATSCHED_RL_EA_H_
#define SATSCHED_RL_EA_H_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

// Evolutionary search over task permutations in which a tabular Q-learning
// policy picks the variation operator for every generation. The search only
// sees a ProblemAdapter, so any permutation-decoded problem can plug in.
namespace satsched::rl_ea {

using Permutation = std::vector<int>;
using Rng = std::mt19937_64;

class ProblemAdapter {
 public:
  virtual ~ProblemAdapter() = default;
  virtual int task_count() const = 0;
  // Objective of the schedule decoded from `permutation`. Must be pure.
  virtual double Evaluate(std::span<const int> permutation) const = 0;
};

enum class Trend { kImproved, kPlateau, kWorsened };
enum class Diversity { kLow, kMedium, kHigh };

inline constexpr int kStateCount = 9;

struct SearchState {
  Trend trend = Trend::kPlateau;
  Diversity diversity = Diversity::kHigh;

  int index() const {
    return static_cast<int>(trend) * 3 + static_cast<int>(diversity);
  }
  std::string Name() const;

  friend bool operator==(const SearchState&, const SearchState&) = default;
};

// Fraction of positions at which two equal-length permutations differ.
double PermutationDistance(std::span<const int> a, std::span<const int> b);
// < 0.2 low, < 0.5 medium, otherwise high.
Diversity DiversityBucket(double mean_distance);

struct Individual {
  Permutation permutation;
  double fitness = 0.0;
};

struct Population {
  std::vector<Individual> individuals;  // sorted by fitness, best first
  int generation = 0;
  Individual best_ever;
  // Best fitness among the offspring of the last generation.
  double last_offspring_best = 0.0;

  double MeanFitness() const;
  double MeanPairwiseDistance() const;
};

class QTable {
 public:
  QTable(int action_count, double learning_rate, double discount,
         double epsilon, int control_t);

  int action_count() const { return action_count_; }
  double learning_rate() const { return learning_rate_; }
  double discount() const { return discount_; }
  double epsilon() const { return epsilon_; }
  int control_t() const { return control_t_; }

  double value(int state, int action) const {
    return values_[state * action_count_ + action];
  }
  void set_value(int state, int action, double v) {
    values_[state * action_count_ + action] = v;
  }
  double MaxValue(int state) const;

  // Q[s,a] += alpha * (reward + gamma * max_a' Q[s',a'] - Q[s,a]).
  void Update(const SearchState& state, int action, double reward,
              const SearchState& next);

  // Multiplies epsilon by 0.95; called once every control_t generations.
  void DecayEpsilon() { epsilon_ *= 0.95; }

 private:
  int action_count_;
  double learning_rate_;
  double discount_;
  double epsilon_;
  int control_t_;
  std::vector<double> values_;
};

// Epsilon-greedy; ties in the greedy branch go to the lowest index.
int SelectAction(const QTable& q, const SearchState& state, Rng& rng);

// Binary tournament with replacement; ties keep the first draw.
const Individual& SelectIndividual(const Population& population, Rng& rng);

struct OperatorContext {
  const Population& population;
  const ProblemAdapter& problem;
  Rng& rng;
};

struct Operator {
  std::string name;
  std::function<Permutation(const Individual& parent,
                            const OperatorContext& context)>
      apply;
};

class OperatorRegistry {
 public:
  OperatorRegistry() = default;
  explicit OperatorRegistry(std::vector<Operator> operators)
      : operators_(std::move(operators)) {}

  // order-crossover, swap, insertion, window-shift, segment-reversal.
  static OperatorRegistry Default();

  int size() const { return static_cast<int>(operators_.size()); }
  const Operator& at(int index) const { return operators_.at(index); }
  void Add(Operator op) { operators_.push_back(std::move(op)); }

 private:
  std::vector<Operator> operators_;
};

Population InitialPopulation(const ProblemAdapter& problem, int size,
                             Rng& rng);

// Produces population-size offspring with the chosen operator (the first
// from `selected`, the rest from tournament-selected parents), then keeps the
// best of parents plus distinct new offspring.
Population EvolveGeneration(const Population& population,
                            const OperatorRegistry& registry, int op_index,
                            const Individual& selected,
                            const ProblemAdapter& problem, Rng& rng);

// 1.0 for a new best, 0.5 for a better mean, 0.0 otherwise.
double ComputeReward(double prev_best, double new_best, double prev_mean,
                     double new_mean);

// IMPROVED on a new best; otherwise PLATEAU while the offspring still reach
// the previous mean fitness, WORSENED when they do not.
SearchState DeriveState(double prev_best, double prev_mean,
                        const Population& population);

enum class SelectionPolicy { kQLearning, kUniform };

struct Config {
  int population_size = 30;
  double alpha = 0.5;
  double gamma = 0.5;
  double epsilon = 0.5;
  int control_t = 10;
  int max_generations = 300;
  std::uint64_t seed = 1;
  // Wall-clock budget in seconds; 0 disables it. A nonzero budget makes the
  // run depend on machine speed.
  double time_limit_s = 0.0;
  SelectionPolicy policy = SelectionPolicy::kQLearning;

  // Throws InputError on out-of-range settings.
  void Validate() const;

  friend bool operator==(const Config&, const Config&) = default;
};

struct TraceRow {
  int generation = 0;
  SearchState state;
  int action = 0;
  std::string action_name;
  double reward = 0.0;
  double best_fitness = 0.0;
  double mean_fitness = 0.0;
  double epsilon = 0.0;
};

struct RunResult {
  Permutation best_permutation;
  double best_fitness = 0.0;
  int best_generation = 0;
  int generations = 0;
  std::vector<TraceRow> trace;
};

RunResult Run(const ProblemAdapter& problem, const Config& config,
              const OperatorRegistry& registry = OperatorRegistry::Default());

}  // namespace satsched::rl_ea

#endif  // SATSCHED_RL_EA_H_
