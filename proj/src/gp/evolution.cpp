#include "transgp/gp/evolution.hpp"

#include <chrono>

#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"
#include "transgp/common/parallel.hpp"
#include "transgp/sim/simulator.hpp"

namespace transgp {

void EvoConfig::validate(int num_tasks) const {
  if (num_tasks < 1) throw InvalidConfig("at least one task is required");
  if (pop_size < 1) throw InvalidConfig("pop_size must be positive");
  if (pop_size % num_tasks != 0) {
    throw InvalidConfig("pop_size " + std::to_string(pop_size) + " is not divisible by " +
                        std::to_string(num_tasks) + " tasks");
  }
  if (generations < 1) throw InvalidConfig("generations must be positive");
  if (tournament_size < 1) throw InvalidConfig("tournament_size must be at least 1");
  if (elites_per_task < 0 || elites_per_task > pop_size / num_tasks) {
    throw InvalidConfig("elites_per_task must fit inside one task's share of the population");
  }
  if (init_min_depth < 0 || init_max_depth < init_min_depth || init_max_depth > max_depth) {
    throw InvalidConfig("initial depth range must lie inside [0, max_depth]");
  }
  if (mutation_max_depth < 0) throw InvalidConfig("mutation_max_depth must be non-negative");
  if (task_switch_prob < 0.0 || task_switch_prob > 1.0) {
    throw InvalidConfig("task_switch_prob must be in [0, 1]");
  }
  if (test_seed_count < 1) throw InvalidConfig("test_seed_count must be positive");
  if (archive_top_k < 0) throw InvalidConfig("archive_top_k must be non-negative");
  scenario.validate();
}

Population init_population(const EvoConfig& cfg, int num_tasks, Rng& rng) {
  cfg.validate(num_tasks);
  Population pop(static_cast<std::size_t>(cfg.pop_size));
  for (std::size_t i = 0; i < pop.size(); ++i) {
    pop[i].task = static_cast<int>(i % static_cast<std::size_t>(num_tasks));
    ExprTree seq = ramped_half_and_half(cfg.init_min_depth, cfg.init_max_depth, rng);
    ExprTree route = ramped_half_and_half(cfg.init_min_depth, cfg.init_max_depth, rng);
    pop[i].heuristic = Heuristic{std::move(seq), std::move(route)};
  }
  return pop;
}

ScenarioConfig scenario_for(const EvoConfig& cfg, const TaskSpec& task) {
  ScenarioConfig sc = cfg.scenario;
  sc.task = task;
  return sc;
}

Instance training_instance(const EvoConfig& cfg, const TaskSpec& task,
                           std::uint64_t generation_seed) {
  return generate_instance(scenario_for(cfg, task), generation_seed);
}

void evaluate_population(Population& pop, const std::vector<TaskSpec>& tasks,
                         const EvoConfig& cfg, std::uint64_t generation_seed) {
  std::vector<Instance> instances;
  instances.reserve(tasks.size());
  for (const TaskSpec& t : tasks) instances.push_back(training_instance(cfg, t, generation_seed));
  parallel_for(pop.size(), cfg.threads, [&](std::size_t i) {
    Individual& ind = pop[i];
    const auto t = static_cast<std::size_t>(ind.task);
    ind.fitness =
        run_simulation(instances[t], ind.heuristic, tasks[t].objective).objective_value;
  });
}

std::size_t tournament_select(const Population& pop, int task, int k, Rng& rng) {
  const std::vector<std::size_t> members = members_of(pop, task);
  if (members.empty()) {
    throw EmptySubpopulation("no individuals assigned to task " + std::to_string(task));
  }
  std::size_t best = members[rng.index(members.size())];
  for (int draw = 1; draw < k; ++draw) {
    const std::size_t c = members[rng.index(members.size())];
    if (fitter(pop[c], pop[best]) ||
        (!fitter(pop[best], pop[c]) && c < best)) {
      best = c;
    }
  }
  return best;
}

std::string log_csv(const std::vector<LogRow>& rows) {
  CsvWriter csv({"generation", "task_id", "best_fitness", "mean_fitness", "best_size",
                 "mean_size", "wall_ms"});
  for (const LogRow& r : rows) {
    csv.add_row({std::to_string(r.generation), r.task_id, format_double(r.best_fitness),
                 format_double(r.mean_fitness), std::to_string(r.best_size),
                 format_double(r.mean_size), format_fixed(r.wall_ms, 1)});
  }
  return csv.str();
}

std::uint64_t generation_seed(std::uint64_t run_seed, int generation) {
  return derive_seed(run_seed, seed_stream::kGeneration, static_cast<std::uint64_t>(generation));
}

std::uint64_t run_seed(std::uint64_t master_seed, int run) {
  return derive_seed(master_seed, seed_stream::kRun, static_cast<std::uint64_t>(run));
}

std::vector<std::uint64_t> test_seeds(std::uint64_t master_seed, int count) {
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < count; ++i) {
    seeds.push_back(derive_seed(master_seed, seed_stream::kTest, static_cast<std::uint64_t>(i)));
  }
  return seeds;
}

double test_policy(const Policy& policy, const TaskSpec& task, const ScenarioConfig& shop,
                   const std::vector<std::uint64_t>& seeds) {
  if (seeds.empty()) throw InvalidConfig("test seed list is empty");
  ScenarioConfig sc = shop;
  sc.task = task;
  double total = 0.0;
  for (std::uint64_t s : seeds) {
    total += run_simulation(generate_instance(sc, s), policy, task.objective).objective_value;
  }
  return total / static_cast<double>(seeds.size());
}

double test_heuristic(const Heuristic& h, const TaskSpec& task, const ScenarioConfig& shop,
                      const std::vector<std::uint64_t>& seeds) {
  return test_policy(HeuristicPolicy(h), task, shop, seeds);
}

EvolutionResult run_evolution(const EvoConfig& cfg, const std::vector<TaskSpec>& tasks,
                              const Variation& variation, std::uint64_t run_seed,
                              const GenerationHook& hook) {
  const int num_tasks = static_cast<int>(tasks.size());
  cfg.validate(num_tasks);
  Rng init_rng(derive_seed(run_seed, seed_stream::kInit, 0));
  Population pop = init_population(cfg, num_tasks, init_rng);
  const int share = cfg.pop_size / num_tasks;
  EvolutionResult result;

  for (int g = 0; g < cfg.generations; ++g) {
    const auto t0 = std::chrono::steady_clock::now();
    evaluate_population(pop, tasks, cfg, generation_seed(run_seed, cfg.rotate_seeds ? g : 0));

    std::vector<std::vector<std::size_t>> ranked(tasks.size());
    for (int t = 0; t < num_tasks; ++t) ranked[static_cast<std::size_t>(t)] = ranked_members(pop, t);
    for (int t = 0; t < num_tasks; ++t) {
      const auto& r = ranked[static_cast<std::size_t>(t)];
      for (std::size_t i = 0; i < r.size() && i < static_cast<std::size_t>(cfg.archive_top_k); ++i) {
        const Individual& ind = pop[r[i]];
        result.archive.push_back({g, tasks[static_cast<std::size_t>(t)], static_cast<int>(i),
                                  ind.fitness_value(), ind.heuristic});
      }
    }
    const std::size_t first_row = result.log.size();
    for (int t = 0; t < num_tasks; ++t) {
      const auto& r = ranked[static_cast<std::size_t>(t)];
      LogRow row;
      row.generation = g;
      row.task_id = tasks[static_cast<std::size_t>(t)].id();
      if (!r.empty()) {
        double sum_f = 0.0;
        double sum_s = 0.0;
        for (std::size_t i : r) {
          sum_f += pop[i].fitness_value();
          sum_s += static_cast<double>(pop[i].heuristic.size());
        }
        row.best_fitness = pop[r.front()].fitness_value();
        row.best_size = static_cast<int>(pop[r.front()].heuristic.size());
        row.mean_fitness = sum_f / static_cast<double>(r.size());
        row.mean_size = sum_s / static_cast<double>(r.size());
      }
      result.log.push_back(row);
    }
    if (hook) hook(g, pop);

    if (g + 1 == cfg.generations) {
      for (int t = 0; t < num_tasks; ++t) {
        const auto& r = ranked[static_cast<std::size_t>(t)];
        if (!r.empty()) result.best.push_back(pop[r.front()]);
      }
    } else {
      // Every task breeds its fixed share: elites first, then offspring of
      // its own tournaments. Offspring may move to another task.
      std::vector<int> slot_task;
      Population next;
      next.reserve(pop.size());
      for (int t = 0; t < num_tasks; ++t) {
        const auto& r = ranked[static_cast<std::size_t>(t)];
        if (r.empty()) {
          throw EmptySubpopulation("task " + tasks[static_cast<std::size_t>(t)].id() +
                                   " lost all its individuals");
        }
        const int elites = std::min<int>(cfg.elites_per_task, static_cast<int>(r.size()));
        for (int e = 0; e < elites; ++e) {
          Individual copy = pop[r[static_cast<std::size_t>(e)]];
          copy.fitness.reset();
          next.push_back(std::move(copy));
        }
        for (int s = elites; s < share; ++s) slot_task.push_back(t);
      }
      const std::size_t base = next.size();
      next.resize(base + slot_task.size());
      parallel_for(slot_task.size(), cfg.threads, [&](std::size_t s) {
        Rng rng(derive_seed(run_seed, seed_stream::kOffspring,
                            static_cast<std::uint64_t>(g) * static_cast<std::uint64_t>(cfg.pop_size) +
                                s));
        const std::size_t parent = tournament_select(pop, slot_task[s], cfg.tournament_size, rng);
        Individual child = variation.vary(pop[parent], num_tasks, rng);
        child.fitness.reset();
        next[base + s] = std::move(child);
      });
      pop = std::move(next);
    }

    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (std::size_t i = first_row; i < result.log.size(); ++i) result.log[i].wall_ms = ms;
  }
  result.final_population = std::move(pop);
  return result;
}

}  // namespace transgp
