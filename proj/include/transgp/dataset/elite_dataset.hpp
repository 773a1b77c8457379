#ifndef TRANSGP_DATASET_ELITE_DATASET_HPP_
#define TRANSGP_DATASET_ELITE_DATASET_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "transgp/expr/heuristic.hpp"
#include "transgp/gp/archive.hpp"
#include "transgp/sim/task.hpp"

namespace transgp {

inline constexpr int kTaskEmbeddingSize = 5;

// [Fmax, Fmean, Tmean one-hot, util_level, mach_num / 10]
std::vector<double> task_embedding(const TaskSpec& task);

struct EliteRecord {
  RuleKind kind = RuleKind::kSequencing;
  TokenSequence tokens;  // START ... END
  TaskSpec task;
  std::vector<double> embedding;
  double fitness = 0.0;
  int run = 0;
  int generation = 0;

  bool operator==(const EliteRecord&) const = default;
};

struct EliteDataset {
  std::vector<EliteRecord> records;
  int max_len = 0;  // at least the longest token sequence

  std::size_t count(RuleKind kind) const;
  // Records of one kind, order kept.
  EliteDataset of_kind(RuleKind kind) const;

  bool operator==(const EliteDataset&) const = default;
};

// Takes the top_k ranked individuals of every task in each run's last
// last_gens generations, emitting one sequencing and one routing record per
// individual. top_k beyond the archived ranks takes what is there. Throws
// InsufficientGenerations when a run is shorter than last_gens.
EliteDataset collect_elites(const std::vector<std::vector<ArchiveEntry>>& runs, int top_k = 20,
                            int last_gens = 20);

// Keeps the first record of every (kind, tokens) pair.
EliteDataset dedup(const EliteDataset& ds);

// Header "TGPDATA v1 R=18 maxlen=<n>", then one line per record:
// kind,task_id,fitness,run,generation,e1..e5,token ids (space separated).
void save_dataset(const EliteDataset& ds, const std::filesystem::path& path);
// Throws IoError, FormatVersionMismatch, ParseError.
EliteDataset load_dataset(const std::filesystem::path& path);

}  // namespace transgp

#endif  // TRANSGP_DATASET_ELITE_DATASET_HPP_
