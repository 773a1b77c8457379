#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "test_support.hpp"
#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"
#include "transgp/gp/archive.hpp"
#include "transgp/gp/evolution.hpp"
#include "transgp/sim/simulator.hpp"

namespace transgp {
namespace {

EvoConfig small_config(int pop, int gens) {
  EvoConfig cfg;
  cfg.pop_size = pop;
  cfg.generations = gens;
  cfg.threads = 1;
  cfg.scenario.num_jobs = 40;
  return cfg;
}

Individual evaluated(const Heuristic& h, int task, double fitness) {
  return Individual{h, task, fitness};
}

TEST(PopulationTest, BalancedInitWithinDepth) {
  EvoConfig cfg = small_config(600, 1);
  Rng rng(1);
  const Population pop = init_population(cfg, 3, rng);
  ASSERT_EQ(pop.size(), 600u);
  for (int t = 0; t < 3; ++t) EXPECT_EQ(members_of(pop, t).size(), 200u);
  for (const Individual& ind : pop) {
    EXPECT_LE(ind.heuristic.sequencing.depth(), 8);
    EXPECT_LE(ind.heuristic.routing.depth(), 6);
    EXPECT_LE(ind.heuristic.sequencing.depth(), 6);
    EXPECT_FALSE(ind.fitness.has_value());
  }
  Rng again(1);
  const Population pop2 = init_population(cfg, 3, again);
  for (std::size_t i = 0; i < pop.size(); ++i) EXPECT_EQ(pop[i].heuristic, pop2[i].heuristic);
  cfg.pop_size = 601;
  EXPECT_THROW(cfg.validate(3), InvalidConfig);
  cfg.pop_size = 600;
  cfg.tournament_size = 0;
  EXPECT_THROW(cfg.validate(3), InvalidConfig);
}

TEST(IndividualTest, CrossTaskComparisonIsRefused) {
  const Heuristic h;
  EXPECT_THROW(fitter(evaluated(h, 0, 1.0), evaluated(h, 1, 2.0)), CrossTaskComparison);
  EXPECT_TRUE(fitter(evaluated(h, 1, 1.0), evaluated(h, 1, 2.0)));
  EXPECT_THROW(Individual{}.fitness_value(), RuntimeFailure);
}

TEST(EvaluateTest, SharedInstanceAndDirectSimulationAgree) {
  const EvoConfig cfg = small_config(6, 1);
  const auto tasks = stock_scenario(1);
  Rng rng(2);
  const Heuristic same = testing::any_heuristic(rng);
  Population pop = {Individual{same, 0, {}}, Individual{same, 0, {}},
                    Individual{testing::any_heuristic(rng), 1, {}}, Individual{same, 2, {}}};
  evaluate_population(pop, tasks, cfg, 1234);
  EXPECT_EQ(pop[0].fitness_value(), pop[1].fitness_value());
  for (const Individual& ind : pop) {
    const TaskSpec& task = tasks[static_cast<std::size_t>(ind.task)];
    const Instance inst = training_instance(cfg, task, 1234);
    EXPECT_EQ(ind.fitness_value(), run_simulation(inst, ind.heuristic, task.objective).objective_value);
  }
  EXPECT_NE(training_instance(cfg, tasks[0], 1234), training_instance(cfg, tasks[0], 1235));
}

TEST(TournamentTest, Examples) {
  Rng rng(3);
  Population pop;
  for (int i = 0; i < 10; ++i) pop.push_back(evaluated(Heuristic{}, i % 2, 10.0 - i));
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(tournament_select(pop, 0, 3, a), tournament_select(pop, 0, 3, b));
  std::map<std::size_t, int> counts;
  for (int i = 0; i < 10000; ++i) counts[tournament_select(pop, 1, 1, rng)]++;
  ASSERT_EQ(counts.size(), 5u);
  for (auto [idx, n] : counts) {
    EXPECT_EQ(idx % 2, 1u);
    EXPECT_NEAR(n / 10000.0, 0.2, 0.02);
  }
  Population lone = {evaluated(Heuristic{}, 0, 1.0), evaluated(Heuristic{}, 1, 5.0)};
  EXPECT_EQ(tournament_select(lone, 1, 5, rng), 1u);
  EXPECT_THROW(tournament_select(lone, 2, 5, rng), EmptySubpopulation);
}

TEST(TournamentTest, TiesGoToLowestIndex) {
  Population pop(4, evaluated(Heuristic{}, 0, 7.0));
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const std::size_t pick = tournament_select(pop, 0, 4, rng);
    EXPECT_LT(pick, 4u);
  }
  // k large enough to almost surely draw index 0: it must win every tie.
  int zero = 0;
  for (int i = 0; i < 200; ++i) zero += tournament_select(pop, 0, 64, rng) == 0;
  EXPECT_EQ(zero, 200);
}

TEST(TournamentTest, BestIsPickedMoreOftenThanWorst) {
  Population pop;
  for (int i = 0; i < 20; ++i) pop.push_back(evaluated(Heuristic{}, 0, static_cast<double>(i)));
  Rng rng(4);
  int best = 0, worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t s = tournament_select(pop, 0, 5, rng);
    best += s == 0;
    worst += s == 19;
  }
  EXPECT_GT(best, worst);
}

TEST(MutationTest, StandardMutationValidAndBounded) {
  Rng rng(6);
  const MutationLimits limits;
  Individual parent{Heuristic{testing::any_tree(rng), testing::any_tree(rng)}, 1, 3.0};
  for (int i = 0; i < 10000; ++i) {
    const Individual child = standard_mutation(parent, limits, rng);
    ASSERT_LE(child.heuristic.sequencing.depth(), 8);
    ASSERT_LE(child.heuristic.routing.depth(), 8);
    ASSERT_EQ(child.task, 1);
    ASSERT_FALSE(child.fitness.has_value());
    ASSERT_TRUE(child.heuristic.sequencing == parent.heuristic.sequencing ||
                child.heuristic.routing == parent.heuristic.routing);
    if (i % 7 == 0) parent.heuristic = child.heuristic;
  }
  Rng a(7), b(7);
  EXPECT_EQ(standard_mutation(parent, limits, a).heuristic, standard_mutation(parent, limits, b).heuristic);
}

TEST(MutationTest, SingleTerminalRuleIsReplacedWhole) {
  const Individual leafy{Heuristic{ExprTree::leaf(Token::kPT), ExprTree::leaf(Token::kPT)}, 0, {}};
  Rng rng(8);
  int changed = 0;
  for (int i = 0; i < 500; ++i) {
    const Individual c = standard_mutation(leafy, MutationLimits{}, rng);
    EXPECT_LE(c.heuristic.sequencing.depth(), 4);
    EXPECT_LE(c.heuristic.routing.depth(), 4);
    changed += c.heuristic != leafy.heuristic;
  }
  EXPECT_GT(changed, 400);
}

TEST(MutationTest, TaskTagSwitching) {
  Rng rng(10);
  const Individual p{Heuristic{}, 0, {}};
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(tgp_mutation(p, MutationLimits{}, 3, 0.0, rng).task, 0);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(tgp_mutation(p, MutationLimits{}, 2, 1.0, rng).task, 1);
  int switched = 0;
  std::map<int, int> targets;
  for (int i = 0; i < 10000; ++i) {
    const int t = tgp_mutation(p, MutationLimits{}, 3, 0.1, rng).task;
    switched += t != 0;
    targets[t]++;
  }
  EXPECT_NEAR(switched / 10000.0, 0.1, 0.02);
  EXPECT_NEAR(targets[1], targets[2], 200);
  EXPECT_EQ(switch_task(0, 1, rng), 0);
}

TEST(EvolutionTest, LogShapeAndPopulationSize) {
  const EvoConfig cfg = small_config(30, 5);
  const auto tasks = stock_scenario(2);
  std::vector<std::size_t> sizes;
  const EvolutionResult res = run_evolution(cfg, tasks, StandardMutation(cfg.limits()), 77,
                                            [&](int, const Population& pop) { sizes.push_back(pop.size()); });
  EXPECT_EQ(res.log.size(), 15u);
  EXPECT_EQ(res.log[4].generation, 1);
  EXPECT_EQ(res.log[4].task_id, tasks[1].id());
  EXPECT_EQ(res.best.size(), 3u);
  EXPECT_EQ(sizes, std::vector<std::size_t>(5, 30u));
  EXPECT_EQ(res.final_population.size(), 30u);
  const auto lines = split(trim(log_csv(res.log)), '\n');
  EXPECT_EQ(lines.size(), 16u);
  EXPECT_EQ(lines[0], "generation,task_id,best_fitness,mean_fitness,best_size,mean_size,wall_ms");
}

TEST(EvolutionTest, ElitismOnFixedInstanceIsMonotone) {
  EvoConfig cfg = small_config(30, 8);
  cfg.rotate_seeds = false;
  const auto tasks = stock_scenario(3);
  const EvolutionResult res = run_evolution(cfg, tasks, TaskTagMutation(cfg.limits(), 0.2), 5);
  for (std::size_t t = 0; t < 3; ++t) {
    for (std::size_t g = 1; g < 8; ++g) {
      EXPECT_LE(res.log[g * 3 + t].best_fitness, res.log[(g - 1) * 3 + t].best_fitness);
    }
  }
}

TEST(EvolutionTest, EliteSurvivesUnchanged) {
  const EvoConfig cfg = small_config(30, 4);
  const auto tasks = stock_scenario(2);
  std::vector<Population> gens;
  run_evolution(cfg, tasks, TaskTagMutation(cfg.limits(), 0.5), 8,
                [&](int, const Population& pop) { gens.push_back(pop); });
  for (std::size_t g = 1; g < gens.size(); ++g) {
    for (int t = 0; t < 3; ++t) {
      const Individual& best = gens[g - 1][ranked_members(gens[g - 1], t).front()];
      const bool kept = std::any_of(gens[g].begin(), gens[g].end(), [&](const Individual& i) {
        return i.task == t && i.heuristic == best.heuristic;
      });
      EXPECT_TRUE(kept);
    }
  }
}

TEST(EvolutionTest, ThreadCountDoesNotChangeResults) {
  EvoConfig cfg = small_config(30, 4);
  const auto tasks = stock_scenario(1);
  const TaskTagMutation tgp(cfg.limits(), 0.1);
  const EvolutionResult serial = run_evolution(cfg, tasks, tgp, 11);
  cfg.threads = 4;
  const EvolutionResult parallel = run_evolution(cfg, tasks, tgp, 11);
  ASSERT_EQ(serial.archive.size(), parallel.archive.size());
  EXPECT_EQ(serial.archive, parallel.archive);
  for (std::size_t i = 0; i < serial.final_population.size(); ++i) {
    EXPECT_EQ(serial.final_population[i].heuristic, parallel.final_population[i].heuristic);
    EXPECT_EQ(serial.final_population[i].task, parallel.final_population[i].task);
  }
}

// The first generation step of a 6-individual, 2-task run, rebuilt from the
// documented seed streams with hand-written selection and mutation.
TEST(EvolutionTest, MatchesHandTracedFirstGeneration) {
  EvoConfig cfg = small_config(6, 2);
  cfg.tournament_size = 2;
  cfg.elites_per_task = 1;
  const std::vector<TaskSpec> tasks = {TaskSpec{Objective::kFmean, 0.85, 6},
                                       TaskSpec{Objective::kTmean, 0.95, 8}};
  const std::uint64_t rs = run_seed(99, 0);
  std::vector<Population> seen;
  run_evolution(cfg, tasks, StandardMutation(cfg.limits()), rs,
                [&](int, const Population& pop) { seen.push_back(pop); });
  ASSERT_EQ(seen.size(), 2u);

  Rng init(derive_seed(rs, seed_stream::kInit, 0));
  Population gen0 = init_population(cfg, 2, init);
  for (std::size_t i = 0; i < gen0.size(); ++i) {
    const TaskSpec& task = tasks[static_cast<std::size_t>(gen0[i].task)];
    const Instance inst = training_instance(cfg, task, derive_seed(rs, seed_stream::kGeneration, 0));
    gen0[i].fitness = run_simulation(inst, gen0[i].heuristic, task.objective).objective_value;
    ASSERT_EQ(gen0[i].heuristic, seen[0][i].heuristic);
    ASSERT_EQ(*gen0[i].fitness, *seen[0][i].fitness);
  }

  std::vector<Individual> expected;
  std::vector<int> slot_task;
  for (int t = 0; t < 2; ++t) {
    std::size_t elite = gen0.size();
    for (std::size_t i = 0; i < gen0.size(); ++i) {
      if (gen0[i].task == t && (elite == gen0.size() || *gen0[i].fitness < *gen0[elite].fitness)) elite = i;
    }
    expected.push_back(gen0[elite]);
    slot_task.push_back(t);
    slot_task.push_back(t);
  }
  for (std::size_t s = 0; s < slot_task.size(); ++s) {
    Rng rng(derive_seed(rs, seed_stream::kOffspring, s));
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < gen0.size(); ++i) {
      if (gen0[i].task == slot_task[s]) members.push_back(i);
    }
    std::size_t winner = members[rng.index(members.size())];
    const std::size_t other = members[rng.index(members.size())];
    if (*gen0[other].fitness < *gen0[winner].fitness ||
        (*gen0[other].fitness == *gen0[winner].fitness && other < winner)) {
      winner = other;
    }
    Individual child = gen0[winner];
    const RuleKind kind = rng.bernoulli(0.5) ? RuleKind::kSequencing : RuleKind::kRouting;
    const ExprTree& tree = child.heuristic.rule(kind);
    const std::size_t k = rng.index(tree.size());
    const int cap = std::max(0, std::min(4, 8 - node_depths(tree)[k]));
    child.heuristic.rule(kind) = replace_subtree(tree, k, random_tree(0, cap, InitMethod::kGrow, rng));
    expected.push_back(child);
  }
  ASSERT_EQ(seen[1].size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(seen[1][i].heuristic, expected[i].heuristic) << "slot " << i;
    EXPECT_EQ(seen[1][i].task, expected[i].task) << "slot " << i;
  }
}

TEST(SeedTest, StreamsAreDistinctAndStable) {
  EXPECT_EQ(test_seeds(1, 30), test_seeds(1, 30));
  EXPECT_NE(test_seeds(1, 30), test_seeds(2, 30));
  EXPECT_NE(run_seed(1, 0), run_seed(1, 1));
  const auto ts = test_seeds(1, 30);
  for (int r = 0; r < 5; ++r) {
    for (int g = 0; g < 50; ++g) {
      EXPECT_EQ(std::count(ts.begin(), ts.end(), generation_seed(run_seed(1, r), g)), 0);
    }
  }
}

TEST(TestHeuristicTest, MeanOverSeeds) {
  const EvoConfig cfg = small_config(6, 1);
  const TaskSpec task{Objective::kFmax, 0.85, 8};
  Rng rng(12);
  const Heuristic h = testing::any_heuristic(rng);
  const auto seeds = test_seeds(3, 4);
  double sum = 0.0;
  for (std::uint64_t s : seeds) {
    const double v = run_simulation(generate_instance(scenario_for(cfg, task), s), h, task.objective).objective_value;
    EXPECT_EQ(test_heuristic(h, task, cfg.scenario, {s}), v);
    sum += v;
  }
  EXPECT_NEAR(test_heuristic(h, task, cfg.scenario, seeds), sum / 4, 1e-9 * sum);
  EXPECT_EQ(test_heuristic(h, task, cfg.scenario, seeds), test_heuristic(h, task, cfg.scenario, seeds));
}

TEST(ArchiveTest, RankedTopKAndCsvRoundTrip) {
  EvoConfig cfg = small_config(30, 3);
  cfg.archive_top_k = 4;
  const auto tasks = stock_scenario(2);
  const EvolutionResult res = run_evolution(cfg, tasks, StandardMutation(cfg.limits()), 3);
  ASSERT_EQ(res.archive.size(), 3u * 3u * 4u);
  for (std::size_t i = 1; i < res.archive.size(); ++i) {
    const ArchiveEntry& a = res.archive[i - 1];
    const ArchiveEntry& b = res.archive[i];
    if (a.generation == b.generation && a.task == b.task) {
      EXPECT_EQ(b.rank, a.rank + 1);
      EXPECT_LE(a.fitness, b.fitness);
    }
  }
  const auto dir = testing::scratch_dir("archive");
  save_archive(dir / "archive.csv", res.archive);
  EXPECT_EQ(load_archive(dir / "archive.csv"), res.archive);
  write_file(dir / "bad.csv", "generation,task_id,rank,fitness,sequencing,routing\n0,Fmean-0.85-8,0,1,0 11 1\n");
  EXPECT_THROW(load_archive(dir / "bad.csv"), ParseError);
}

}  // namespace
}  // namespace transgp
