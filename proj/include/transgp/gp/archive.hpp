#ifndef TRANSGP_GP_ARCHIVE_HPP_
#define TRANSGP_GP_ARCHIVE_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "transgp/expr/heuristic.hpp"
#include "transgp/sim/task.hpp"

namespace transgp {

// One ranked individual of one generation, as kept for elite harvesting.
struct ArchiveEntry {
  int generation = 0;
  TaskSpec task;
  int rank = 0;  // 0 is the best of its task in that generation
  double fitness = 0.0;
  Heuristic heuristic;

  bool operator==(const ArchiveEntry&) const = default;
};

// CSV: generation,task_id,rank,fitness,sequencing,routing with rules as
// space-separated token ids (START/END included).
std::string archive_csv(const std::vector<ArchiveEntry>& entries);
void save_archive(const std::filesystem::path& path, const std::vector<ArchiveEntry>& entries);
// Throws IoError / ParseError.
std::vector<ArchiveEntry> load_archive(const std::filesystem::path& path);

}  // namespace transgp

#endif  // TRANSGP_GP_ARCHIVE_HPP_
