#include "transgp/dataset/elite_dataset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"

namespace transgp {

std::vector<double> task_embedding(const TaskSpec& task) {
  std::vector<double> e(kTaskEmbeddingSize, 0.0);
  e[static_cast<std::size_t>(task.objective)] = 1.0;
  e[3] = task.util_level;
  e[4] = task.mach_num / 10.0;
  return e;
}

std::size_t EliteDataset::count(RuleKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [&](const EliteRecord& r) { return r.kind == kind; }));
}

EliteDataset EliteDataset::of_kind(RuleKind kind) const {
  EliteDataset out;
  out.max_len = max_len;
  for (const EliteRecord& r : records) {
    if (r.kind == kind) out.records.push_back(r);
  }
  return out;
}

EliteDataset collect_elites(const std::vector<std::vector<ArchiveEntry>>& runs, int top_k,
                            int last_gens) {
  EliteDataset ds;
  for (std::size_t run = 0; run < runs.size(); ++run) {
    const auto& entries = runs[run];
    int generations = 0;
    std::vector<std::string> task_order;
    for (const ArchiveEntry& e : entries) {
      generations = std::max(generations, e.generation + 1);
      const std::string id = e.task.id();
      if (std::find(task_order.begin(), task_order.end(), id) == task_order.end()) {
        task_order.push_back(id);
      }
    }
    if (generations < last_gens) {
      throw InsufficientGenerations("run " + std::to_string(run) + " has " +
                                    std::to_string(generations) + " generations, need " +
                                    std::to_string(last_gens));
    }
    // (task, generation) -> entries ordered by rank
    std::map<std::pair<std::string, int>, std::vector<const ArchiveEntry*>> groups;
    for (const ArchiveEntry& e : entries) {
      if (e.generation >= generations - last_gens && e.rank < top_k) {
        groups[{e.task.id(), e.generation}].push_back(&e);
      }
    }
    for (const std::string& task : task_order) {
      for (int g = generations - last_gens; g < generations; ++g) {
        auto it = groups.find({task, g});
        if (it == groups.end()) continue;
        auto& group = it->second;
        std::stable_sort(group.begin(), group.end(),
                         [](const ArchiveEntry* a, const ArchiveEntry* b) { return a->rank < b->rank; });
        for (const ArchiveEntry* e : group) {
          for (RuleKind kind : {RuleKind::kSequencing, RuleKind::kRouting}) {
            EliteRecord r;
            r.kind = kind;
            r.tokens = to_prefix_tokens(e->heuristic.rule(kind));
            r.task = e->task;
            r.embedding = task_embedding(e->task);
            r.fitness = e->fitness;
            r.run = static_cast<int>(run);
            r.generation = e->generation;
            ds.max_len = std::max(ds.max_len, static_cast<int>(r.tokens.size()));
            ds.records.push_back(std::move(r));
          }
        }
      }
    }
  }
  return ds;
}

EliteDataset dedup(const EliteDataset& ds) {
  EliteDataset out;
  out.max_len = ds.max_len;
  std::set<std::pair<RuleKind, TokenSequence>> seen;
  for (const EliteRecord& r : ds.records) {
    if (seen.insert({r.kind, r.tokens}).second) out.records.push_back(r);
  }
  return out;
}

namespace {

constexpr const char* kMagic = "TGPDATA";
constexpr const char* kVersion = "v1";

}  // namespace

void save_dataset(const EliteDataset& ds, const std::filesystem::path& path) {
  int max_len = ds.max_len;
  for (const EliteRecord& r : ds.records) max_len = std::max(max_len, static_cast<int>(r.tokens.size()));
  std::string out = std::string(kMagic) + " " + kVersion + " R=" + std::to_string(kVocabSize) +
                    " maxlen=" + std::to_string(max_len) + "\n";
  for (const EliteRecord& r : ds.records) {
    out += std::string(rule_kind_name(r.kind)) + "," + r.task.id() + "," +
           format_double(r.fitness) + "," + std::to_string(r.run) + "," +
           std::to_string(r.generation);
    for (double v : r.embedding) out += "," + format_double(v);
    out += ",";
    const std::vector<int> ids = to_token_ids(r.tokens);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(ids[i]);
    }
    out += "\n";
  }
  write_file(path, out);
}

EliteDataset load_dataset(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) throw FormatVersionMismatch(path.string() + ": missing header");
  const std::vector<std::string> head = split(trim(lines[0]), ' ');
  const std::string want_r = "R=" + std::to_string(kVocabSize);
  if (head.size() != 4 || head[0] != kMagic || head[1] != kVersion || head[2] != want_r ||
      head[3].rfind("maxlen=", 0) != 0) {
    throw FormatVersionMismatch(path.string() + ": unsupported header '" + lines[0] + "'");
  }
  EliteDataset ds;
  try {
    ds.max_len = static_cast<int>(parse_int(head[3].substr(7)));
  } catch (const ParseError&) {
    throw FormatVersionMismatch(path.string() + ": bad maxlen in header");
  }
  const std::size_t fields = 5 + kTaskEmbeddingSize + 1;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(i + 1);
    const std::vector<std::string> f = split(lines[i], ',');
    if (f.size() != fields) throw ParseError(where + ": expected " + std::to_string(fields) + " fields");
    EliteRecord r;
    try {
      r.kind = rule_kind_from_name(f[0]);
      r.task = TaskSpec::parse(f[1]);
      r.fitness = parse_double(f[2]);
      r.run = static_cast<int>(parse_int(f[3]));
      r.generation = static_cast<int>(parse_int(f[4]));
      for (int k = 0; k < kTaskEmbeddingSize; ++k) r.embedding.push_back(parse_double(f[5 + static_cast<std::size_t>(k)]));
      std::vector<int> ids;
      for (const std::string& part : split(f.back(), ' ')) {
        if (!part.empty()) ids.push_back(static_cast<int>(parse_int(part)));
      }
      r.tokens = from_token_ids(ids);
      from_prefix_tokens(r.tokens);
    } catch (const MalformedSequence& e) {
      throw ParseError(where + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (static_cast<int>(r.tokens.size()) > ds.max_len) {
      throw ParseError(where + ": sequence longer than header maxlen");
    }
    ds.records.push_back(std::move(r));
  }
  return ds;
}

}  // namespace transgp
