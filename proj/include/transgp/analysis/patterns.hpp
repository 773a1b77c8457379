#ifndef TRANSGP_ANALYSIS_PATTERNS_HPP_
#define TRANSGP_ANALYSIS_PATTERNS_HPP_

#include <set>
#include <string>
#include <vector>

#include "transgp/expr/expr_tree.hpp"

namespace transgp {

struct PatternRow {
  ExprTree pattern;
  long frequency = 0;
  double coverage = 0.0;  // percent of all rooted subtrees in the corpus
};

struct PatternTable {
  std::vector<PatternRow> rows;  // frequency descending, then canonical key
  long total_subtrees = 0;
  double coverage_sum() const;
};

// Counts every rooted subtree of every tree, grouped by canonical key.
// top_n < 0 keeps every pattern.
PatternTable mine_patterns(const std::vector<ExprTree>& corpus, int top_n = -1);

// Canonical keys of every rooted subtree in the corpus.
std::set<std::string> corpus_patterns(const std::vector<ExprTree>& corpus);

// Percent of the offspring's distinct rooted subtrees found in `patterns`.
double pattern_similarity(const ExprTree& offspring, const std::set<std::string>& patterns);

// Infix rendering cut off below `depth`, e.g. "max(min(*(...), ...), ...)".
std::string pattern_label(const ExprTree& pattern, int depth = 2);

}  // namespace transgp

#endif  // TRANSGP_ANALYSIS_PATTERNS_HPP_
