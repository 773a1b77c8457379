#ifndef TRANSGP_CLI_COMMANDS_HPP_
#define TRANSGP_CLI_COMMANDS_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "transgp/cli/experiment_config.hpp"
#include "transgp/common/stats.hpp"
#include "transgp/dataset/elite_dataset.hpp"

namespace transgp {

// Each command is a library function so that tests can drive the same
// pipeline the executable runs. Progress lines go to `log` when non-null.

struct EvolveOutput {
  std::filesystem::path method_dir;  // out/<method>/<scenario>
  std::vector<std::filesystem::path> run_dirs;
  // best[r][t]: run r's final best heuristic for task t
  std::vector<std::vector<Heuristic>> best;
  // test[t][r]: mean test objective of best[r][t]
  std::vector<std::vector<double>> test;
  long guided_fallbacks = 0;
};

// Writes out/<method>/<scenario>/run<k>/{log.csv, archive.csv, manifest.json,
// best_task<j>.json} for every run, plus test.csv and summary.csv beside
// the run directories.
EvolveOutput cmd_evolve(const ExperimentConfig& cfg, std::ostream* log = nullptr);

struct CollectOutput {
  EliteDataset raw;
  EliteDataset deduped;
  std::filesystem::path sequencing_file;
  std::filesystem::path routing_file;
};

// Reads archive.csv from each run directory (a directory without one is
// searched for run* subdirectories) and writes sequencing.tgpdata,
// routing.tgpdata and collect_report.csv into out_dir.
CollectOutput cmd_collect(const std::vector<std::filesystem::path>& run_dirs, int top_k,
                          int last_gens, const std::filesystem::path& out_dir,
                          std::ostream* log = nullptr);

struct TrainOutput {
  std::filesystem::path model_file;
  TrainResult result;
};

// Trains the model for one rule kind on `dataset` (records of other kinds
// are ignored) and writes <kind>.tgpm and loss_<kind>.csv into out_dir.
TrainOutput cmd_train(const std::filesystem::path& dataset, RuleKind kind,
                      const TransformerConfig& model, const TrainConfig& train,
                      const std::filesystem::path& out_dir, std::ostream* log = nullptr);

struct BaselineRow {
  std::string rule;  // "SPT+NIQ"
  std::string task_id;
  double test_mean = 0.0;
};

// The 4 x 2 handcrafted grid on every task, written to baseline.csv.
std::vector<BaselineRow> cmd_baseline(const ExperimentConfig& cfg, std::ostream* log = nullptr);

struct PureTransRow {
  std::string task_id;
  SummaryStats stats;
  std::vector<double> samples;
};

// pure_trans.csv (task_id,min,mean,std,max) and pure_trans_samples.csv.
std::vector<PureTransRow> cmd_pure_trans(const ExperimentConfig& cfg, std::ostream* log = nullptr);

// Size, usage, similarity and pattern reports over the final heuristics of
// one or more method directories. Patterns come from `dataset` when given,
// otherwise from the heuristics themselves.
void cmd_analyze(const std::vector<std::filesystem::path>& method_dirs,
                 const std::filesystem::path& dataset, int top_n,
                 const std::filesystem::path& out_dir, std::ostream* log = nullptr);

// Per-task Wilcoxon comparison of two test.csv files; writes significance.csv.
void cmd_stats(const std::filesystem::path& candidate, const std::filesystem::path& reference,
               const std::string& candidate_label, const std::string& reference_label,
               const std::filesystem::path& out_file, std::ostream* log = nullptr);

// Reads test.csv: test[task_id] = per-run values in run order.
std::vector<std::pair<std::string, std::vector<double>>> load_test_csv(
    const std::filesystem::path& path);

// Entry point of the executable; returns the process exit code
// (0 ok, 2 config error, 3 io error, 4 runtime error).
int run_cli(int argc, char** argv);

}  // namespace transgp

#endif  // TRANSGP_CLI_COMMANDS_HPP_
