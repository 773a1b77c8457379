#include "transgp/analysis/patterns.hpp"

#include <algorithm>
#include <map>

namespace transgp {

double PatternTable::coverage_sum() const {
  double s = 0.0;
  for (const PatternRow& r : rows) s += r.coverage;
  return s;
}

PatternTable mine_patterns(const std::vector<ExprTree>& corpus, int top_n) {
  std::map<std::string, PatternRow> groups;
  PatternTable table;
  for (const ExprTree& tree : corpus) {
    for (ExprTree& sub : all_subtrees(tree)) {
      auto [it, inserted] = groups.try_emplace(canonical_key(sub));
      if (inserted) it->second.pattern = std::move(sub);
      ++it->second.frequency;
      ++table.total_subtrees;
    }
  }
  std::vector<std::pair<std::string, PatternRow>> sorted(groups.begin(), groups.end());
  // The map is already ordered by key, so a stable sort on frequency breaks
  // ties by key.
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.second.frequency > b.second.frequency;
  });
  for (auto& [key, row] : sorted) {
    if (top_n >= 0 && static_cast<int>(table.rows.size()) >= top_n) break;
    row.coverage = 100.0 * static_cast<double>(row.frequency) / static_cast<double>(table.total_subtrees);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::set<std::string> corpus_patterns(const std::vector<ExprTree>& corpus) {
  std::set<std::string> keys;
  for (const ExprTree& tree : corpus) {
    for (const ExprTree& sub : all_subtrees(tree)) keys.insert(canonical_key(sub));
  }
  return keys;
}

double pattern_similarity(const ExprTree& offspring, const std::set<std::string>& patterns) {
  std::set<std::string> distinct;
  for (const ExprTree& sub : all_subtrees(offspring)) distinct.insert(canonical_key(sub));
  long hits = 0;
  for (const std::string& key : distinct) hits += patterns.count(key);
  return 100.0 * static_cast<double>(hits) / static_cast<double>(distinct.size());
}

std::string pattern_label(const ExprTree& pattern, int depth) {
  return infix_string_truncated(pattern, depth);
}

}  // namespace transgp
