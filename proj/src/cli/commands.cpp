#include "transgp/cli/commands.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "transgp/analysis/reports.hpp"
#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"
#include "transgp/guided/pure_trans.hpp"
#include "transgp/neural/model_io.hpp"
#include "transgp/sim/audit.hpp"
#include "transgp/sim/scenario_io.hpp"
#include "transgp/sim/simulator.hpp"

namespace transgp {

namespace fs = std::filesystem;

namespace {

RuleModels load_models(const ExperimentConfig& cfg) {
  RuleModels models;
  models.sequencing = load_params(cfg.sequencing_model);
  models.routing = load_params(cfg.routing_model);
  return models;
}

std::string run_dir_name(int k) { return "run" + std::to_string(k); }

// run<k> directories under `dir`, ordered by k.
std::vector<fs::path> run_subdirs(const fs::path& dir) {
  std::vector<std::pair<long long, fs::path>> found;
  if (fs::is_directory(dir)) {
    for (const auto& entry : fs::directory_iterator(dir)) {
      const std::string name = entry.path().filename().string();
      if (!entry.is_directory() || name.rfind("run", 0) != 0 || name.size() == 3) continue;
      try {
        found.emplace_back(parse_int(name.substr(3)), entry.path());
      } catch (const ParseError&) {
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<fs::path> out;
  for (auto& f : found) out.push_back(f.second);
  return out;
}

void check_test_seeds_disjoint(const ExperimentConfig& cfg, const std::vector<std::uint64_t>& test) {
  const std::set<std::uint64_t> test_set(test.begin(), test.end());
  for (int k = cfg.first_run; k < cfg.first_run + cfg.runs; ++k) {
    const std::uint64_t rs = run_seed(cfg.seed, k);
    for (int g = 0; g < cfg.evo.generations; ++g) {
      if (test_set.count(generation_seed(rs, g)) != 0) {
        throw RuntimeFailure("a test seed coincides with a training seed; pick another master seed");
      }
    }
  }
}

std::unique_ptr<Variation> make_variation(const ExperimentConfig& cfg, const RuleModels& models) {
  switch (cfg.method) {
    case Method::kGP: return std::make_unique<StandardMutation>(cfg.evo.limits());
    case Method::kTGP:
      return std::make_unique<TaskTagMutation>(cfg.evo.limits(), cfg.evo.task_switch_prob);
    case Method::kTransGP:
      return std::make_unique<GuidedVariation>(models, cfg.tasks, cfg.guided, cfg.evo.limits());
    default: throw ConfigError("not an evolutionary method");
  }
}

}  // namespace

EvolveOutput cmd_evolve(const ExperimentConfig& cfg, std::ostream* log) {
  if (cfg.method == Method::kPureTrans || cfg.method == Method::kHandcrafted) {
    throw ConfigError("evolve runs GP, TGP or TransGP; use `baseline` or `pure-trans` for " +
                      std::string(method_name(cfg.method)));
  }
  cfg.validate();
  EvolveOutput out;
  out.method_dir = cfg.out / std::string(method_name(cfg.method)) / cfg.scenario_name();
  RuleModels models;
  if (cfg.method == Method::kTransGP) models = load_models(cfg);
  const std::unique_ptr<Variation> variation = make_variation(cfg, models);
  const std::vector<std::uint64_t> seeds = test_seeds(cfg.seed, cfg.evo.test_seed_count);
  check_test_seeds_disjoint(cfg, seeds);

  const std::size_t num_tasks = cfg.tasks.size();
  out.test.assign(num_tasks, {});
  CsvWriter test_csv({"run", "task_id", "test_value"});
  for (int k = cfg.first_run; k < cfg.first_run + cfg.runs; ++k) {
    const fs::path dir = out.method_dir / run_dir_name(k);
    const EvolutionResult res = run_evolution(cfg.evo, cfg.tasks, *variation, run_seed(cfg.seed, k));
    write_file(dir / "log.csv", log_csv(res.log));
    save_archive(dir / "archive.csv", res.archive);
    ExperimentConfig manifest = cfg;
    manifest.first_run = k;
    manifest.runs = 1;
    write_file(dir / "manifest.json", experiment_to_json(manifest).dump(2) + "\n");

    std::vector<Heuristic> best;
    for (std::size_t t = 0; t < num_tasks; ++t) {
      const Individual& ind = res.best.at(t);
      const double value = test_heuristic(ind.heuristic, cfg.tasks[t], cfg.evo.scenario, seeds);
      save_heuristic(dir / ("best_task" + std::to_string(t) + ".json"), ind.heuristic,
                     {{"task", cfg.tasks[t].id()},
                      {"train_fitness", ind.fitness_value()},
                      {"test_value", value}});
      out.test[t].push_back(value);
      test_csv.add_row({std::to_string(k), cfg.tasks[t].id(), format_double(value)});
      best.push_back(ind.heuristic);
      if (log != nullptr) {
        *log << method_name(cfg.method) << " run " << k << " " << cfg.tasks[t].id()
             << " test=" << format_fixed(value, 2) << " size=" << ind.heuristic.size() << "\n";
      }
    }
    out.best.push_back(std::move(best));
    out.run_dirs.push_back(dir);
  }
  if (const auto* guided = dynamic_cast<const GuidedVariation*>(variation.get())) {
    out.guided_fallbacks = guided->fallbacks();
    if (log != nullptr && out.guided_fallbacks > 0) {
      *log << "guided mutation fell back to standard mutation " << out.guided_fallbacks
           << " times\n";
    }
  }
  test_csv.save(out.method_dir / "test.csv");
  CsvWriter summary({"task_id", "mean", "std", "min", "max"});
  for (std::size_t t = 0; t < num_tasks; ++t) {
    const SummaryStats s = summarize(out.test[t]);
    summary.add_row({cfg.tasks[t].id(), format_double(s.mean), format_double(s.std),
                     format_double(s.min), format_double(s.max)});
  }
  summary.save(out.method_dir / "summary.csv");
  return out;
}

CollectOutput cmd_collect(const std::vector<fs::path>& run_dirs, int top_k, int last_gens,
                          const fs::path& out_dir, std::ostream* log) {
  std::vector<fs::path> archives;
  for (const fs::path& d : run_dirs) {
    if (fs::exists(d / "archive.csv")) {
      archives.push_back(d / "archive.csv");
      continue;
    }
    const std::vector<fs::path> subs = run_subdirs(d);
    std::size_t before = archives.size();
    for (const fs::path& s : subs) {
      if (fs::exists(s / "archive.csv")) archives.push_back(s / "archive.csv");
    }
    if (archives.size() == before) throw IoError("no run archives found under " + d.string());
  }
  if (archives.empty()) throw IoError("no run directories given");
  std::vector<std::vector<ArchiveEntry>> runs;
  for (const fs::path& a : archives) runs.push_back(load_archive(a));

  CollectOutput out;
  out.raw = collect_elites(runs, top_k, last_gens);
  out.deduped = dedup(out.raw);
  out.sequencing_file = out_dir / "sequencing.tgpdata";
  out.routing_file = out_dir / "routing.tgpdata";
  save_dataset(out.deduped.of_kind(RuleKind::kSequencing), out.sequencing_file);
  save_dataset(out.deduped.of_kind(RuleKind::kRouting), out.routing_file);
  CsvWriter report({"rule_kind", "pre_dedup", "post_dedup"});
  for (RuleKind kind : {RuleKind::kSequencing, RuleKind::kRouting}) {
    report.add_row({std::string(rule_kind_name(kind)), std::to_string(out.raw.count(kind)),
                    std::to_string(out.deduped.count(kind))});
    if (log != nullptr) {
      *log << rule_kind_name(kind) << ": " << out.raw.count(kind) << " records before dedup, "
           << out.deduped.count(kind) << " after\n";
    }
  }
  report.save(out_dir / "collect_report.csv");
  return out;
}

TrainOutput cmd_train(const fs::path& dataset, RuleKind kind, const TransformerConfig& model,
                      const TrainConfig& train_cfg, const fs::path& out_dir, std::ostream* log) {
  const EliteDataset ds = load_dataset(dataset).of_kind(kind);
  TrainOutput out;
  const std::string name(rule_kind_name(kind));
  out.result = train(ds, model, train_cfg, [&](int epoch, double loss) {
    if (log != nullptr) *log << name << " epoch " << epoch << " loss " << format_fixed(loss, 4) << "\n";
  });
  out.model_file = out_dir / (name + ".tgpm");
  save_params(out.result.params, out.model_file);
  write_file(out_dir / ("loss_" + name + ".csv"), loss_csv(out.result.epoch_losses));
  if (log != nullptr) {
    *log << name << " initial loss " << format_fixed(out.result.initial_loss, 4) << ", final "
         << format_fixed(out.result.epoch_losses.empty() ? out.result.initial_loss
                                                         : out.result.epoch_losses.back(),
                         4)
         << "\n";
  }
  return out;
}

std::vector<BaselineRow> cmd_baseline(const ExperimentConfig& cfg, std::ostream* log) {
  cfg.validate();
  const std::vector<std::uint64_t> seeds = test_seeds(cfg.seed, cfg.evo.test_seed_count);
  std::vector<BaselineRow> rows;
  CsvWriter csv({"rule", "task_id", "test_mean"});
  for (const HandcraftedPolicy& policy : handcrafted_grid()) {
    for (const TaskSpec& task : cfg.tasks) {
      BaselineRow row{policy.name(), task.id(), test_policy(policy, task, cfg.evo.scenario, seeds)};
      csv.add_row({row.rule, row.task_id, format_double(row.test_mean)});
      if (log != nullptr) *log << row.rule << " " << row.task_id << " " << format_fixed(row.test_mean, 2) << "\n";
      rows.push_back(std::move(row));
    }
  }
  csv.save(cfg.out / "handcrafted" / cfg.scenario_name() / "baseline.csv");
  return rows;
}

std::vector<PureTransRow> cmd_pure_trans(const ExperimentConfig& cfg, std::ostream* log) {
  ExperimentConfig checked = cfg;
  checked.method = Method::kPureTrans;
  checked.validate();
  const RuleModels models = load_models(cfg);
  const std::vector<std::uint64_t> seeds = test_seeds(cfg.seed, cfg.evo.test_seed_count);
  std::vector<PureTransRow> rows;
  CsvWriter summary({"task_id", "min", "mean", "std", "max"});
  CsvWriter samples({"task_id", "sample", "test_value", "sequencing", "routing"});
  for (std::size_t t = 0; t < cfg.tasks.size(); ++t) {
    const PureTransResult res = pure_trans_baseline(
        models, cfg.tasks[t], cfg.evo.scenario, cfg.pure_trans_samples, seeds, cfg.guided,
        derive_seed(cfg.seed, seed_stream::kSampling, t), cfg.evo.threads);
    PureTransRow row{cfg.tasks[t].id(), res.stats, res.test_values};
    summary.add_row({row.task_id, format_double(row.stats.min), format_double(row.stats.mean),
                     format_double(row.stats.std), format_double(row.stats.max)});
    for (std::size_t i = 0; i < res.test_values.size(); ++i) {
      samples.add_row({row.task_id, std::to_string(i), format_double(res.test_values[i]),
                       canonical_key(res.heuristics[i].sequencing),
                       canonical_key(res.heuristics[i].routing)});
    }
    if (log != nullptr) {
      *log << "PureTrans " << row.task_id << " mean " << format_fixed(row.stats.mean, 2) << " std "
           << format_fixed(row.stats.std, 2) << "\n";
    }
    rows.push_back(std::move(row));
  }
  const fs::path dir = cfg.out / "PureTrans" / cfg.scenario_name();
  summary.save(dir / "pure_trans.csv");
  samples.save(dir / "pure_trans_samples.csv");
  return rows;
}

void cmd_analyze(const std::vector<fs::path>& method_dirs, const fs::path& dataset, int top_n,
                 const fs::path& out_dir, std::ostream* log) {
  std::vector<MethodHeuristics> methods;
  std::vector<ExprTree> corpus;
  for (const fs::path& dir : method_dirs) {
    const std::vector<fs::path> runs = run_subdirs(dir);
    if (runs.empty()) throw IoError("no run directories under " + dir.string());
    const ExperimentConfig manifest = load_experiment(runs.front() / "manifest.json");
    MethodHeuristics m;
    m.method = std::string(method_name(manifest.method));
    m.tasks = manifest.tasks;
    for (const fs::path& run : runs) {
      std::vector<Heuristic> best;
      for (std::size_t t = 0; t < m.tasks.size(); ++t) {
        best.push_back(load_heuristic(run / ("best_task" + std::to_string(t) + ".json")));
        corpus.push_back(best.back().sequencing);
        corpus.push_back(best.back().routing);
      }
      m.runs.push_back(std::move(best));
    }
    methods.push_back(std::move(m));
  }
  if (!dataset.empty()) {
    corpus.clear();
    for (const EliteRecord& r : load_dataset(dataset).records) corpus.push_back(from_prefix_tokens(r.tokens));
  }
  write_file(out_dir / "sizes.csv", size_report(methods));
  write_file(out_dir / "usage.csv", usage_report(methods));
  write_file(out_dir / "similarity.csv", similarity_report(methods));
  const PatternTable patterns = mine_patterns(corpus, top_n);
  write_file(out_dir / "patterns.csv", pattern_report(patterns));
  if (log != nullptr) {
    *log << "analysed " << methods.size() << " method(s); " << patterns.total_subtrees
         << " subtrees mined, top-" << patterns.rows.size() << " coverage "
         << format_fixed(patterns.coverage_sum(), 2) << "%\n";
  }
}

std::vector<std::pair<std::string, std::vector<double>>> load_test_csv(const fs::path& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty() || trim(lines[0]) != "run,task_id,test_value") {
    throw ParseError(path.string() + ": expected header run,task_id,test_value");
  }
  std::vector<std::pair<std::string, std::vector<double>>> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const std::vector<std::string> f = split(trim(lines[i]), ',');
    if (f.size() != 3) throw ParseError(path.string() + ":" + std::to_string(i + 1) + ": expected 3 fields");
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == f[1]; });
    if (it == out.end()) {
      out.emplace_back(f[1], std::vector<double>{});
      it = out.end() - 1;
    }
    it->second.push_back(parse_double(f[2]));
  }
  return out;
}

void cmd_stats(const fs::path& candidate, const fs::path& reference,
               const std::string& candidate_label, const std::string& reference_label,
               const fs::path& out_file, std::ostream* log) {
  const auto a = load_test_csv(candidate);
  const auto b = load_test_csv(reference);
  std::vector<SignificanceRow> rows;
  for (const auto& [task, values] : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const auto& p) { return p.first == task; });
    if (it == b.end()) continue;
    rows.push_back(compare_samples(candidate_label + " vs " + reference_label, task, values, it->second));
    if (log != nullptr) {
      *log << task << " " << rows.back().verdict << " p=" << format_fixed(rows.back().p_value, 4) << "\n";
    }
  }
  if (rows.empty()) throw ParseError("the two result files share no task");
  write_file(out_file, significance_report(rows));
}

namespace {

struct GlobalOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<int> threads;
  std::optional<double> temperature;
  std::optional<double> task_switch_prob;
};

ExperimentConfig resolve_config(const GlobalOptions& g) {
  ExperimentConfig cfg = g.config.empty() ? experiment_from_json(nlohmann::json::object())
                                          : load_experiment(g.config);
  if (g.seed) cfg.seed = *g.seed;
  if (!g.out.empty()) cfg.out = g.out;
  if (g.threads) cfg.evo.threads = *g.threads;
  if (g.temperature) cfg.guided.temperature = *g.temperature;
  if (g.task_switch_prob) {
    cfg.evo.task_switch_prob = *g.task_switch_prob;
    cfg.guided.task_switch_prob = *g.task_switch_prob;
  }
  return cfg;
}

std::optional<HandcraftedPolicy> rule_by_name(const std::string& name) {
  for (const HandcraftedPolicy& p : handcrafted_grid()) {
    if (p.name() == name) return p;
  }
  return std::nullopt;
}

int simulate(const GlobalOptions& g, const std::string& scenario_file, const std::string& task,
             const std::string& heuristic_file, const std::string& rule) {
  ScenarioConfig sc = scenario_file.empty() ? ScenarioConfig{} : load_scenario(scenario_file);
  if (!task.empty()) {
    try {
      sc.task = TaskSpec::parse(task);
    } catch (const ParseError& e) {
      throw ConfigError(e.what());
    }
  }
  if (g.seed) sc.seed = *g.seed;
  const Instance inst = generate_instance(sc);
  SimResult result;
  if (!heuristic_file.empty()) {
    const Heuristic h = load_heuristic(heuristic_file);
    result = run_simulation(inst, h, sc.task.objective);
  } else {
    const auto policy = rule_by_name(rule.empty() ? "SPT+NIQ" : rule);
    if (!policy) throw ConfigError("unknown rule '" + rule + "' (e.g. SPT+NIQ, FIFO+WIQ)");
    result = run_simulation(inst, *policy, sc.task.objective);
  }
  const std::vector<std::string> issues = audit_schedule(inst, result);
  std::cout << sc.task.id() << " seed " << sc.seed << ": " << objective_name(sc.task.objective)
            << " = " << format_fixed(result.objective_value, 4) << ", audit violations "
            << issues.size() << "\n";
  for (const std::string& issue : issues) std::cout << "  " << issue << "\n";
  if (!g.out.empty()) write_file(g.out, sim_result_csv(result));
  return issues.empty() ? 0 : 4;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Multitask GP hyper-heuristics for dynamic flexible job shops, with "
               "transformer-guided mutation"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  std::uint64_t seed = 0;
  int threads = 0;
  double temperature = 0.0;
  double switch_prob = 0.0;
  app.add_option("--config", g.config, "Experiment config (JSON)")->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", seed, "Master seed");
  app.add_option("--out", g.out, "Output directory (file for simulate/stats)");
  auto* threads_opt = app.add_option("--threads", threads, "Worker threads (0 = all cores)");
  auto* temp_opt = app.add_option("--temperature", temperature, "Sampling temperature");
  auto* switch_opt = app.add_option("--task-switch-prob", switch_prob, "Task switch probability");

  std::string scenario_file, task, heuristic_file, rule;
  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate one instance under a heuristic or rule");
  simulate_cmd->add_option("--scenario", scenario_file, "Scenario config (JSON)")->check(CLI::ExistingFile);
  simulate_cmd->add_option("--task", task, "Task id, e.g. Fmean-0.85-8");
  simulate_cmd->add_option("--heuristic", heuristic_file, "Heuristic JSON")->check(CLI::ExistingFile);
  simulate_cmd->add_option("--rule", rule, "Handcrafted pair, e.g. SPT+NIQ");

  std::string method, models_dir;
  int runs = 0;
  auto* evolve_cmd = app.add_subcommand("evolve", "Run GP, TGP or TransGP");
  evolve_cmd->add_option("--method", method, "GP, TGP or TransGP");
  evolve_cmd->add_option("--runs", runs, "Number of independent runs");
  evolve_cmd->add_option("--models", models_dir, "Directory holding sequencing.tgpm and routing.tgpm");

  std::vector<std::string> run_dirs;
  int top_k = 0, last_gens = 0;
  auto* collect_cmd = app.add_subcommand("collect", "Harvest elite rules from run archives");
  collect_cmd->add_option("--runs", run_dirs, "Run directories or their parents")->required();
  collect_cmd->add_option("--top-k", top_k, "Elites per task and generation");
  collect_cmd->add_option("--last-gens", last_gens, "Trailing generations to harvest");

  std::string dataset_dir, dataset_file, kind_name;
  auto* train_cmd = app.add_subcommand("train", "Train the rule generators");
  train_cmd->add_option("--dataset-dir", dataset_dir, "Directory from `collect`");
  train_cmd->add_option("--dataset", dataset_file, "Single dataset file")->check(CLI::ExistingFile);
  train_cmd->add_option("--kind", kind_name, "sequencing or routing (with --dataset)");

  auto* baseline_cmd = app.add_subcommand("baseline", "Evaluate the handcrafted rule grid");

  int samples = 0;
  auto* pure_cmd = app.add_subcommand("pure-trans", "Sample complete rules from the models");
  pure_cmd->add_option("--models", models_dir, "Directory holding sequencing.tgpm and routing.tgpm");
  pure_cmd->add_option("--samples", samples, "Rule pairs per task");

  std::string analyze_dataset;
  int top_n = 10;
  auto* analyze_cmd = app.add_subcommand("analyze", "Size, usage, similarity and pattern reports");
  analyze_cmd->add_option("--runs", run_dirs, "Method directories (out/<method>/<scenario>)")->required();
  analyze_cmd->add_option("--dataset", analyze_dataset, "Corpus for pattern mining")->check(CLI::ExistingFile);
  analyze_cmd->add_option("--top-n", top_n, "Patterns to report");

  std::string file_a, file_b, label_a = "A", label_b = "B";
  auto* stats_cmd = app.add_subcommand("stats", "Wilcoxon rank-sum comparison of two test.csv files");
  stats_cmd->add_option("--a", file_a, "Candidate test.csv")->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--b", file_b, "Reference test.csv")->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--label-a", label_a, "Candidate name");
  stats_cmd->add_option("--label-b", label_b, "Reference name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*seed_opt) g.seed = seed;
  if (*threads_opt) g.threads = threads;
  if (*temp_opt) g.temperature = temperature;
  if (*switch_opt) g.task_switch_prob = switch_prob;

  try {
    if (simulate_cmd->parsed()) return simulate(g, scenario_file, task, heuristic_file, rule);

    if (stats_cmd->parsed()) {
      const fs::path out = g.out.empty() ? fs::path("significance.csv") : fs::path(g.out);
      cmd_stats(file_a, file_b, label_a, label_b, out, &std::cout);
      return 0;
    }

    ExperimentConfig cfg = resolve_config(g);
    if (!models_dir.empty()) {
      cfg.sequencing_model = fs::path(models_dir) / "sequencing.tgpm";
      cfg.routing_model = fs::path(models_dir) / "routing.tgpm";
    }
    if (evolve_cmd->parsed()) {
      if (!method.empty()) cfg.method = method_from_name(method);
      if (runs > 0) cfg.runs = runs;
      cmd_evolve(cfg, &std::cout);
    } else if (collect_cmd->parsed()) {
      std::vector<fs::path> dirs(run_dirs.begin(), run_dirs.end());
      cmd_collect(dirs, top_k > 0 ? top_k : cfg.collect_top_k,
                  last_gens > 0 ? last_gens : cfg.collect_last_gens, cfg.out, &std::cout);
    } else if (train_cmd->parsed()) {
      TrainConfig tc = cfg.train;
      if (!dataset_file.empty()) {
        if (kind_name.empty()) throw ConfigError("--dataset needs --kind");
        const RuleKind kind = rule_kind_from_name(kind_name);
        tc.seed = derive_seed(cfg.seed, seed_stream::kTraining, static_cast<std::uint64_t>(kind));
        cmd_train(dataset_file, kind, cfg.model, tc, cfg.out, &std::cout);
      } else {
        if (dataset_dir.empty()) throw ConfigError("give --dataset-dir or --dataset");
        for (RuleKind kind : {RuleKind::kSequencing, RuleKind::kRouting}) {
          tc.seed = derive_seed(cfg.seed, seed_stream::kTraining, static_cast<std::uint64_t>(kind));
          cmd_train(fs::path(dataset_dir) / (std::string(rule_kind_name(kind)) + ".tgpdata"), kind,
                    cfg.model, tc, cfg.out, &std::cout);
        }
      }
    } else if (baseline_cmd->parsed()) {
      cmd_baseline(cfg, &std::cout);
    } else if (pure_cmd->parsed()) {
      if (samples > 0) cfg.pure_trans_samples = samples;
      cmd_pure_trans(cfg, &std::cout);
    } else if (analyze_cmd->parsed()) {
      std::vector<fs::path> dirs(run_dirs.begin(), run_dirs.end());
      cmd_analyze(dirs, analyze_dataset, top_n, cfg.out, &std::cout);
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace transgp
