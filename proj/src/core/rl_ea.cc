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

#include "satsched/rl_ea.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>

#include "satsched/scenario.h"

namespace satsched::rl_ea {

namespace {

constexpr int kShiftRadius = 3;
constexpr int kStallFactor = 50;

int UniformIndex(Rng& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

// Two distinct positions, i < j.
std::pair<int, int> TwoPositions(Rng& rng, int n) {
  int i = UniformIndex(rng, n);
  int j = UniformIndex(rng, n - 1);
  if (j >= i) ++j;
  return {std::min(i, j), std::max(i, j)};
}

Permutation OrderCrossover(const Individual& parent,
                           const OperatorContext& ctx) {
  const Permutation& p = parent.permutation;
  const int n = static_cast<int>(p.size());
  if (n < 2) return p;
  const Permutation& mate = SelectIndividual(ctx.population, ctx.rng).permutation;
  const auto [lo, hi] = TwoPositions(ctx.rng, n);
  Permutation child(n, -1);
  std::vector<bool> used(n, false);
  for (int k = lo; k <= hi; ++k) {
    child[k] = p[k];
    used[p[k]] = true;
  }
  int write = (hi + 1) % n;
  for (int k = 0; k < n; ++k) {
    const int gene = mate[(hi + 1 + k) % n];
    if (used[gene]) continue;
    child[write] = gene;
    write = (write + 1) % n;
  }
  return child;
}

Permutation SwapMutation(const Individual& parent, const OperatorContext& ctx) {
  Permutation child = parent.permutation;
  if (child.size() < 2) return child;
  const auto [i, j] = TwoPositions(ctx.rng, static_cast<int>(child.size()));
  std::swap(child[i], child[j]);
  return child;
}

Permutation InsertionMutation(const Individual& parent,
                              const OperatorContext& ctx) {
  Permutation child = parent.permutation;
  const int n = static_cast<int>(child.size());
  if (n < 2) return child;
  const int from = UniformIndex(ctx.rng, n);
  int to = UniformIndex(ctx.rng, n - 1);
  if (to >= from) ++to;
  const int gene = child[from];
  child.erase(child.begin() + from);
  child.insert(child.begin() + to, gene);
  return child;
}

// Moves one random task to each position within kShiftRadius and returns
// the best evaluated neighbour.
Permutation WindowShift(const Individual& parent, const OperatorContext& ctx) {
  const Permutation& p = parent.permutation;
  const int n = static_cast<int>(p.size());
  if (n < 2) return p;
  const int from = UniformIndex(ctx.rng, n);
  Permutation best;
  double best_fitness = 0.0;
  for (int to = std::max(0, from - kShiftRadius);
       to <= std::min(n - 1, from + kShiftRadius); ++to) {
    if (to == from) continue;
    Permutation moved = p;
    const int gene = moved[from];
    moved.erase(moved.begin() + from);
    moved.insert(moved.begin() + to, gene);
    const double fitness = ctx.problem.Evaluate(moved);
    if (best.empty() || fitness > best_fitness) {
      best = std::move(moved);
      best_fitness = fitness;
    }
  }
  return best;
}

Permutation SegmentReversal(const Individual& parent,
                            const OperatorContext& ctx) {
  Permutation child = parent.permutation;
  if (child.size() < 2) return child;
  const auto [i, j] = TwoPositions(ctx.rng, static_cast<int>(child.size()));
  std::reverse(child.begin() + i, child.begin() + j + 1);
  return child;
}

void SortByFitness(std::vector<Individual>& individuals) {
  std::stable_sort(individuals.begin(), individuals.end(),
                   [](const Individual& a, const Individual& b) {
                     return a.fitness > b.fitness;
                   });
}

const char* TrendName(Trend t) {
  switch (t) {
    case Trend::kImproved:
      return "improved";
    case Trend::kPlateau:
      return "plateau";
    case Trend::kWorsened:
      return "worsened";
  }
  return "?";
}

const char* DiversityName(Diversity d) {
  switch (d) {
    case Diversity::kLow:
      return "low";
    case Diversity::kMedium:
      return "medium";
    case Diversity::kHigh:
      return "high";
  }
  return "?";
}

}  // namespace

std::string SearchState::Name() const {
  return std::string(TrendName(trend)) + "-" + DiversityName(diversity);
}

double PermutationDistance(std::span<const int> a, std::span<const int> b) {
  if (a.empty()) return 0.0;
  int differ = 0;
  for (std::size_t i = 0; i < a.size(); ++i) differ += a[i] != b[i];
  return static_cast<double>(differ) / static_cast<double>(a.size());
}

Diversity DiversityBucket(double mean_distance) {
  if (mean_distance < 0.2) return Diversity::kLow;
  if (mean_distance < 0.5) return Diversity::kMedium;
  return Diversity::kHigh;
}

double Population::MeanFitness() const {
  if (individuals.empty()) return 0.0;
  double total = 0.0;
  for (const Individual& ind : individuals) total += ind.fitness;
  return total / static_cast<double>(individuals.size());
}

double Population::MeanPairwiseDistance() const {
  const std::size_t n = individuals.size();
  if (n < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      total += PermutationDistance(individuals[i].permutation,
                                   individuals[j].permutation);
    }
  }
  return total / static_cast<double>(n * (n - 1) / 2);
}

QTable::QTable(int action_count, double learning_rate, double discount,
               double epsilon, int control_t)
    : action_count_(action_count),
      learning_rate_(learning_rate),
      discount_(discount),
      epsilon_(epsilon),
      control_t_(control_t),
      values_(static_cast<std::size_t>(kStateCount) * action_count, 0.0) {}

double QTable::MaxValue(int state) const {
  double best = value(state, 0);
  for (int a = 1; a < action_count_; ++a) best = std::max(best, value(state, a));
  return best;
}

void QTable::Update(const SearchState& state, int action, double reward,
                    const SearchState& next) {
  const int s = state.index();
  const double current = value(s, action);
  const double target = reward + discount_ * MaxValue(next.index());
  set_value(s, action, current + learning_rate_ * (target - current));
}

int SelectAction(const QTable& q, const SearchState& state, Rng& rng) {
  const double roll = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (roll < q.epsilon()) return UniformIndex(rng, q.action_count());
  const int s = state.index();
  int best = 0;
  for (int a = 1; a < q.action_count(); ++a) {
    if (q.value(s, a) > q.value(s, best)) best = a;
  }
  return best;
}

const Individual& SelectIndividual(const Population& population, Rng& rng) {
  const int n = static_cast<int>(population.individuals.size());
  if (n == 0) throw InputError("cannot select from an empty population");
  const Individual& a = population.individuals[UniformIndex(rng, n)];
  const Individual& b = population.individuals[UniformIndex(rng, n)];
  return b.fitness > a.fitness ? b : a;
}

OperatorRegistry OperatorRegistry::Default() {
  return OperatorRegistry({
      {"order-crossover", OrderCrossover},
      {"swap", SwapMutation},
      {"insertion", InsertionMutation},
      {"window-shift", WindowShift},
      {"segment-reversal", SegmentReversal},
  });
}

Population InitialPopulation(const ProblemAdapter& problem, int size,
                             Rng& rng) {
  Population population;
  Permutation identity(problem.task_count());
  std::iota(identity.begin(), identity.end(), 0);
  for (int i = 0; i < size; ++i) {
    Individual ind{identity, 0.0};
    std::shuffle(ind.permutation.begin(), ind.permutation.end(), rng);
    ind.fitness = problem.Evaluate(ind.permutation);
    population.individuals.push_back(std::move(ind));
  }
  SortByFitness(population.individuals);
  population.best_ever = population.individuals.front();
  population.last_offspring_best = population.best_ever.fitness;
  return population;
}

Population EvolveGeneration(const Population& population,
                            const OperatorRegistry& registry, int op_index,
                            const Individual& selected,
                            const ProblemAdapter& problem, Rng& rng) {
  const Operator& op = registry.at(op_index);
  const int size = static_cast<int>(population.individuals.size());
  const OperatorContext ctx{population, problem, rng};
  std::vector<Individual> offspring;
  offspring.reserve(size);
  for (int i = 0; i < size; ++i) {
    const Individual& parent =
        i == 0 ? selected : SelectIndividual(population, rng);
    offspring.push_back({op.apply(parent, ctx), 0.0});
  }
  // Evaluation is pure; results are consumed in offspring order.
  for (Individual& child : offspring) {
    child.fitness = problem.Evaluate(child.permutation);
  }

  Population next;
  next.generation = population.generation + 1;
  next.best_ever = population.best_ever;
  next.last_offspring_best = offspring.empty() ? 0.0 : offspring[0].fitness;
  std::set<Permutation> seen;
  std::vector<Individual> pool = population.individuals;
  for (const Individual& ind : pool) seen.insert(ind.permutation);
  for (Individual& child : offspring) {
    next.last_offspring_best =
        std::max(next.last_offspring_best, child.fitness);
    if (seen.insert(child.permutation).second) pool.push_back(std::move(child));
  }
  SortByFitness(pool);
  pool.resize(size);
  next.individuals = std::move(pool);
  if (!next.individuals.empty() &&
      next.individuals.front().fitness > next.best_ever.fitness) {
    next.best_ever = next.individuals.front();
  }
  return next;
}

double ComputeReward(double prev_best, double new_best, double prev_mean,
                     double new_mean) {
  if (new_best > prev_best) return 1.0;
  if (new_mean > prev_mean) return 0.5;
  return 0.0;
}

SearchState DeriveState(double prev_best, double prev_mean,
                        const Population& population) {
  SearchState state;
  if (population.best_ever.fitness > prev_best) {
    state.trend = Trend::kImproved;
  } else if (population.last_offspring_best >= prev_mean) {
    state.trend = Trend::kPlateau;
  } else {
    state.trend = Trend::kWorsened;
  }
  state.diversity = DiversityBucket(population.MeanPairwiseDistance());
  return state;
}

void Config::Validate() const {
  if (population_size < 2) throw InputError("population size must be >= 2");
  if (!(alpha > 0 && alpha <= 1)) throw InputError("alpha must be in (0,1]");
  if (!(gamma >= 0 && gamma < 1)) throw InputError("gamma must be in [0,1)");
  if (!(epsilon >= 0 && epsilon <= 1)) {
    throw InputError("epsilon must be in [0,1]");
  }
  if (control_t < 1) throw InputError("control T must be >= 1");
  if (max_generations < 0) throw InputError("generations must be >= 0");
  if (!(time_limit_s >= 0)) throw InputError("time limit must be >= 0");
}

RunResult Run(const ProblemAdapter& problem, const Config& config,
              const OperatorRegistry& registry) {
  config.Validate();
  if (registry.size() < 2) throw InputError("need at least two operators");
  const auto started = std::chrono::steady_clock::now();
  Rng rng(config.seed);
  Population population =
      InitialPopulation(problem, config.population_size, rng);
  QTable q(registry.size(), config.alpha, config.gamma, config.epsilon,
           config.control_t);
  const bool learn = config.policy == SelectionPolicy::kQLearning;

  RunResult result;
  SearchState state{Trend::kPlateau,
                    DiversityBucket(population.MeanPairwiseDistance())};
  int stall = 0;
  for (int gen = 1; gen <= config.max_generations; ++gen) {
    if (config.time_limit_s > 0) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - started;
      if (elapsed.count() >= config.time_limit_s) break;
    }
    const double epsilon = learn ? q.epsilon() : 1.0;
    const int action = learn ? SelectAction(q, state, rng)
                             : UniformIndex(rng, registry.size());
    const Individual selected = SelectIndividual(population, rng);
    const double prev_best = population.best_ever.fitness;
    const double prev_mean = population.MeanFitness();
    population =
        EvolveGeneration(population, registry, action, selected, problem, rng);
    const double new_best = population.best_ever.fitness;
    const double new_mean = population.MeanFitness();
    const double reward =
        ComputeReward(prev_best, new_best, prev_mean, new_mean);
    const SearchState next = DeriveState(prev_best, prev_mean, population);
    if (learn) q.Update(state, action, reward, next);

    result.trace.push_back({gen, state, action, registry.at(action).name,
                            reward, new_best, new_mean, epsilon});
    result.generations = gen;
    if (new_best > prev_best) {
      result.best_generation = gen;
      stall = 0;
    } else {
      ++stall;
    }
    if (gen % config.control_t == 0) q.DecayEpsilon();
    state = next;
    if (stall >= kStallFactor * config.control_t) break;
  }
  result.best_permutation = population.best_ever.permutation;
  result.best_fitness = population.best_ever.fitness;
  return result;
}

}  // namespace satsched::rl_ea
