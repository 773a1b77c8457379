#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"
#include "transgp/cli/commands.hpp"
#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"
#include "transgp/sim/scenario_io.hpp"

namespace transgp {
namespace {

namespace fs = std::filesystem;

ExperimentConfig small_config(const fs::path& out) {
  nlohmann::json j = {
      {"scenario", 2},
      {"seed", 11},
      {"runs", 2},
      {"evolution",
       {{"pop_size", 30}, {"generations", 6}, {"elites_per_task", 1}, {"test_seed_count", 4},
        {"archive_top_k", 5}, {"threads", 2}}},
      {"shop", {{"num_jobs", 30}}},
      {"out", out.string()},
  };
  return experiment_from_json(j);
}

// log.csv without its wall-clock column.
std::vector<std::string> log_without_time(const fs::path& file) {
  std::vector<std::string> out;
  for (const std::string& line : read_lines(file)) {
    auto cells = split(line, ',');
    cells.pop_back();
    std::string joined;
    for (const auto& c : cells) joined += c + ",";
    out.push_back(joined);
  }
  return out;
}

int invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "transgp");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

TEST(ConfigTest, ParsesAndRejects) {
  const ExperimentConfig cfg = small_config("x");
  EXPECT_EQ(cfg.tasks.size(), 3u);
  EXPECT_EQ(cfg.evo.pop_size, 30);
  EXPECT_EQ(cfg.evo.scenario.num_jobs, 30);
  EXPECT_EQ(cfg.scenario_name(), "scenario2");
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_EQ(experiment_to_json(experiment_from_json(experiment_to_json(cfg))), experiment_to_json(cfg));

  EXPECT_THROW(experiment_from_json({{"sead", 3}}), ConfigError);
  EXPECT_THROW(experiment_from_json({{"evolution", {{"popsize", 3}}}}), ConfigError);
  ExperimentConfig trans = cfg;
  trans.method = Method::kTransGP;
  EXPECT_THROW(trans.validate(), ConfigError);
  ExperimentConfig odd = cfg;
  odd.evo.pop_size = 31;
  EXPECT_THROW(odd.validate(), ConfigError);
}

TEST(EvolveCommandTest, ArtifactsAreCompleteAndReproducible) {
  const fs::path root = testing::scratch_dir("cli_evolve");
  const ExperimentConfig cfg = small_config(root / "a");
  const EvolveOutput out = cmd_evolve(cfg);
  ASSERT_EQ(out.run_dirs.size(), 2u);
  EXPECT_EQ(out.method_dir, root / "a" / "GP" / "scenario2");
  for (const fs::path& d : out.run_dirs) {
    for (const char* f : {"log.csv", "archive.csv", "manifest.json", "best_task0.json",
                          "best_task1.json", "best_task2.json"}) {
      EXPECT_TRUE(fs::exists(d / f)) << d / f;
    }
    EXPECT_EQ(read_lines(d / "log.csv").size(), 1u + 6u * 3u);
    EXPECT_EQ(load_archive(d / "archive.csv").size(), 6u * 3u * 5u);
  }
  EXPECT_EQ(read_lines(out.method_dir / "test.csv").size(), 1u + 2u * 3u);
  EXPECT_EQ(read_lines(out.method_dir / "summary.csv").size(), 1u + 3u);

  // the saved heuristics re-evaluate to the logged test values
  const auto seeds = test_seeds(cfg.seed, cfg.evo.test_seed_count);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t t = 0; t < 3; ++t) {
      const fs::path file = out.run_dirs[r] / ("best_task" + std::to_string(t) + ".json");
      const Heuristic h = load_heuristic(file);
      EXPECT_EQ(h, out.best[r][t]);
      EXPECT_DOUBLE_EQ(test_heuristic(h, cfg.tasks[t], cfg.evo.scenario, seeds), out.test[t][r]);
      const auto extra = nlohmann::json::parse(read_file(file));
      EXPECT_EQ(extra.at("task").get<std::string>(), cfg.tasks[t].id());
    }
  }

  // a second invocation with the same config gives byte-identical results
  ExperimentConfig again = cfg;
  again.out = root / "b";
  again.evo.threads = 1;
  const EvolveOutput twin = cmd_evolve(again);
  EXPECT_EQ(read_file(out.method_dir / "test.csv"), read_file(twin.method_dir / "test.csv"));
  EXPECT_EQ(read_file(out.method_dir / "summary.csv"), read_file(twin.method_dir / "summary.csv"));
  for (std::size_t r = 0; r < 2; ++r) {
    EXPECT_EQ(read_file(out.run_dirs[r] / "archive.csv"), read_file(twin.run_dirs[r] / "archive.csv"));
    EXPECT_EQ(log_without_time(out.run_dirs[r] / "log.csv"),
              log_without_time(twin.run_dirs[r] / "log.csv"));
    EXPECT_EQ(read_file(out.run_dirs[r] / "best_task1.json"),
              read_file(twin.run_dirs[r] / "best_task1.json"));
  }

  // a run's manifest replays that run alone
  ExperimentConfig replay = load_experiment(out.run_dirs[1] / "manifest.json");
  EXPECT_EQ(replay.first_run, 1);
  EXPECT_EQ(replay.runs, 1);
  replay.out = root / "c";
  const EvolveOutput single = cmd_evolve(replay);
  ASSERT_EQ(single.run_dirs.size(), 1u);
  EXPECT_EQ(single.run_dirs[0].filename(), "run1");
  EXPECT_EQ(read_file(single.run_dirs[0] / "archive.csv"), read_file(out.run_dirs[1] / "archive.csv"));
  for (std::size_t t = 0; t < 3; ++t) EXPECT_EQ(single.test[t][0], out.test[t][1]);

  // collect from the method directory
  const CollectOutput c = cmd_collect({out.method_dir}, 5, 3, root / "data");
  EXPECT_EQ(c.raw.count(RuleKind::kSequencing), 2u * 3u * 3u * 5u);
  EXPECT_EQ(c.raw.count(RuleKind::kRouting), 2u * 3u * 3u * 5u);
  EXPECT_LE(c.deduped.records.size(), c.raw.records.size());
  EXPECT_TRUE(fs::exists(c.sequencing_file));
  EXPECT_TRUE(fs::exists(c.routing_file));
  EXPECT_EQ(read_lines(root / "data" / "collect_report.csv").size(), 3u);
  EXPECT_THROW(cmd_collect({root / "nothing"}, 5, 3, root / "data"), IoError);

  // train a tiny model on it
  TransformerConfig mc;
  mc.d = 16;
  mc.heads = 2;
  mc.layers = 1;
  mc.ff = 32;
  TrainConfig tc;
  tc.epochs = 3;
  tc.batch_size = 16;
  tc.seed = 5;
  const TrainOutput t1 = cmd_train(c.routing_file, RuleKind::kRouting, mc, tc, root / "m1");
  EXPECT_EQ(read_lines(root / "m1" / "loss_routing.csv").size(), 1u + 3u);
  EXPECT_TRUE(fs::exists(t1.model_file));
  cmd_train(c.routing_file, RuleKind::kRouting, mc, tc, root / "m2");
  EXPECT_EQ(read_file(root / "m1" / "routing.tgpm"), read_file(root / "m2" / "routing.tgpm"));

  // stats of a result against itself
  cmd_stats(out.method_dir / "test.csv", twin.method_dir / "test.csv", "GP", "GP",
            root / "sig.csv");
  const auto sig = read_lines(root / "sig.csv");
  ASSERT_EQ(sig.size(), 4u);
  for (std::size_t i = 1; i < sig.size(); ++i) EXPECT_EQ(split(sig[i], ',').back(), "=");
  const auto loaded = load_test_csv(out.method_dir / "test.csv");
  ASSERT_EQ(loaded.size(), 3u);
  EXPECT_EQ(loaded[0].second, out.test[0]);

  // analysis over the method directory
  cmd_analyze({out.method_dir}, c.sequencing_file, 5, root / "analysis");
  for (const char* f : {"sizes.csv", "usage.csv", "similarity.csv", "patterns.csv"}) {
    EXPECT_TRUE(fs::exists(root / "analysis" / f)) << f;
  }
}

TEST(BaselineCommandTest, FullGrid) {
  const fs::path root = testing::scratch_dir("cli_baseline");
  const ExperimentConfig cfg = small_config(root);
  const auto rows = cmd_baseline(cfg);
  EXPECT_EQ(rows.size(), 8u * 3u);
  EXPECT_EQ(read_lines(root / "handcrafted" / "scenario2" / "baseline.csv").size(), 1u + 24u);
  for (const auto& r : rows) EXPECT_GT(r.test_mean, 0.0);
}

TEST(RunCliTest, ExitCodes) {
  const fs::path root = testing::scratch_dir("cli_exit");
  nlohmann::json j = experiment_to_json(small_config(root / "out"));
  write_file(root / "cfg.json", j.dump(2));
  write_file(root / "bad.json", "{\"sead\": 1}");

  ScenarioConfig shop;
  shop.task = TaskSpec::parse("Fmean-0.85-8");
  shop.num_jobs = 20;
  write_file(root / "shop.json", scenario_to_json(shop).dump());
  EXPECT_EQ(invoke({"simulate", "--scenario", (root / "shop.json").string(), "--rule", "SPT+NIQ", "--out",
                    (root / "sim.csv").string()}),
            0);
  EXPECT_TRUE(fs::exists(root / "sim.csv"));
  EXPECT_EQ(invoke({"simulate", "--scenario", (root / "shop.json").string(), "--rule", "XYZ+NIQ"}), 2);
  EXPECT_EQ(invoke({"--config", (root / "cfg.json").string(), "baseline"}), 0);
  EXPECT_TRUE(fs::exists(root / "out" / "handcrafted" / "scenario2" / "baseline.csv"));
  EXPECT_EQ(invoke({"--config", (root / "bad.json").string(), "baseline"}), 2);
  EXPECT_EQ(invoke({"--config", (root / "missing.json").string(), "baseline"}), 2);
  EXPECT_EQ(invoke({"--config", (root / "cfg.json").string(), "evolve", "--method", "PureTrans"}), 2);
  EXPECT_EQ(invoke({"--config", (root / "cfg.json").string(), "evolve", "--method", "TransGP"}), 2);
  EXPECT_EQ(invoke({"--out", root.string(), "collect", "--runs", (root / "none").string()}), 3);
  EXPECT_EQ(invoke({"frobnicate"}), 2);
  EXPECT_EQ(invoke({"--help"}), 0);
}

}  // namespace
}  // namespace transgp
