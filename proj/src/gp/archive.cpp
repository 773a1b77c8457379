#include "transgp/gp/archive.hpp"

#include <sstream>

#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"

namespace transgp {

namespace {

std::string ids_field(const ExprTree& tree) {
  std::string out;
  for (int id : to_token_ids(to_prefix_tokens(tree))) {
    if (!out.empty()) out += ' ';
    out += std::to_string(id);
  }
  return out;
}

ExprTree tree_field(const std::string& field) {
  std::vector<int> ids;
  for (const std::string& part : split(field, ' ')) {
    if (!part.empty()) ids.push_back(static_cast<int>(parse_int(part)));
  }
  return from_prefix_tokens(from_token_ids(ids));
}

}  // namespace

std::string archive_csv(const std::vector<ArchiveEntry>& entries) {
  CsvWriter csv({"generation", "task_id", "rank", "fitness", "sequencing", "routing"});
  for (const ArchiveEntry& e : entries) {
    csv.add_row({std::to_string(e.generation), e.task.id(), std::to_string(e.rank),
                 format_double(e.fitness), ids_field(e.heuristic.sequencing),
                 ids_field(e.heuristic.routing)});
  }
  return csv.str();
}

void save_archive(const std::filesystem::path& path, const std::vector<ArchiveEntry>& entries) {
  write_file(path, archive_csv(entries));
}

std::vector<ArchiveEntry> load_archive(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) throw ParseError(path.string() + ": empty archive");
  std::vector<ArchiveEntry> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const std::vector<std::string> f = split(lines[i], ',');
    if (f.size() != 6) {
      throw ParseError(path.string() + ":" + std::to_string(i + 1) + ": expected 6 fields");
    }
    ArchiveEntry e;
    try {
      e.generation = static_cast<int>(parse_int(f[0]));
      e.task = TaskSpec::parse(f[1]);
      e.rank = static_cast<int>(parse_int(f[2]));
      e.fitness = parse_double(f[3]);
      e.heuristic.sequencing = tree_field(f[4]);
      e.heuristic.routing = tree_field(f[5]);
    } catch (const MalformedSequence& err) {
      throw ParseError(path.string() + ":" + std::to_string(i + 1) + ": " + err.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace transgp
