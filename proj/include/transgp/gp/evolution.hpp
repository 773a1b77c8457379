#ifndef TRANSGP_GP_EVOLUTION_HPP_
#define TRANSGP_GP_EVOLUTION_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "transgp/common/rng.hpp"
#include "transgp/gp/archive.hpp"
#include "transgp/gp/individual.hpp"
#include "transgp/gp/mutation.hpp"
#include "transgp/sim/instance.hpp"
#include "transgp/sim/policy.hpp"

namespace transgp {

struct EvoConfig {
  int pop_size = 600;
  int generations = 50;
  int tournament_size = 5;
  int elites_per_task = 4;
  int max_depth = kDefaultMaxDepth;
  int init_min_depth = 2;
  int init_max_depth = 6;
  int mutation_max_depth = 4;
  double task_switch_prob = 0.1;
  int test_seed_count = 30;
  // A fresh training instance every generation; false pins generation 0's.
  bool rotate_seeds = true;
  // Ranked individuals per task and generation kept in the run archive.
  int archive_top_k = 20;
  int threads = 0;
  // Shop template; its task is replaced by each evolved task.
  ScenarioConfig scenario;

  MutationLimits limits() const { return {max_depth, mutation_max_depth}; }
  // Throws InvalidConfig.
  void validate(int num_tasks) const;
};

// Balanced round-robin task assignment, ramped half-and-half trees.
Population init_population(const EvoConfig& cfg, int num_tasks, Rng& rng);

ScenarioConfig scenario_for(const EvoConfig& cfg, const TaskSpec& task);

// The shared instance every individual of `task` meets in a generation.
Instance training_instance(const EvoConfig& cfg, const TaskSpec& task,
                           std::uint64_t generation_seed);

// Simulates every individual on its task's shared instance.
void evaluate_population(Population& pop, const std::vector<TaskSpec>& tasks,
                         const EvoConfig& cfg, std::uint64_t generation_seed);

// k draws with replacement from the task's subpopulation; best wins, ties
// to the lowest population index. Throws EmptySubpopulation.
std::size_t tournament_select(const Population& pop, int task, int k, Rng& rng);

struct LogRow {
  int generation = 0;
  std::string task_id;
  double best_fitness = 0.0;
  double mean_fitness = 0.0;
  int best_size = 0;
  double mean_size = 0.0;
  double wall_ms = 0.0;
};

std::string log_csv(const std::vector<LogRow>& rows);

struct EvolutionResult {
  std::vector<LogRow> log;
  // Best individual per task in the final generation.
  std::vector<Individual> best;
  std::vector<ArchiveEntry> archive;
  Population final_population;
};

using GenerationHook = std::function<void(int generation, const Population&)>;

// Seeds: init from (run_seed, kInit), generation g's instances from
// (run_seed, kGeneration, g), offspring slot s of generation g from
// (run_seed, kOffspring, g * pop_size + s). Offspring are produced in parallel
// and the result does not depend on the thread count.
EvolutionResult run_evolution(const EvoConfig& cfg, const std::vector<TaskSpec>& tasks,
                              const Variation& variation, std::uint64_t run_seed,
                              const GenerationHook& hook = {});

std::uint64_t generation_seed(std::uint64_t run_seed, int generation);
std::uint64_t run_seed(std::uint64_t master_seed, int run);
// Test instances are shared across methods: they depend on the master seed only.
std::vector<std::uint64_t> test_seeds(std::uint64_t master_seed, int count);

double test_heuristic(const Heuristic& h, const TaskSpec& task, const ScenarioConfig& shop,
                      const std::vector<std::uint64_t>& seeds);
double test_policy(const Policy& policy, const TaskSpec& task, const ScenarioConfig& shop,
                   const std::vector<std::uint64_t>& seeds);

}  // namespace transgp

#endif  // TRANSGP_GP_EVOLUTION_HPP_
