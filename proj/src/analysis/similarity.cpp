#include "transgp/analysis/similarity.hpp"

#include <algorithm>
#include <cstdlib>

#include "transgp/common/error.hpp"

namespace transgp {

double jaccard(const TokenSet& a, const TokenSet& b) {
  std::size_t inter = 0;
  std::size_t uni = 0;
  for (int id = 0; id < kVocabSize; ++id) {
    const Token t = token_from_id(id);
    const bool in_a = a.contains(t);
    const bool in_b = b.contains(t);
    inter += in_a && in_b;
    uni += in_a || in_b;
  }
  return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

double size_similarity(int s1, int s2) {
  if (s1 < 1 || s2 < 1) {
    throw InvalidSize("sizes must be at least 1, got " + std::to_string(s1) + " and " +
                      std::to_string(s2));
  }
  return 1.0 - static_cast<double>(std::abs(s1 - s2)) / static_cast<double>(std::max(s1, s2));
}

std::map<Token, int> usage_counts(const ExprTree& tree) {
  std::map<Token, int> counts;
  for (Token t : tree.nodes()) ++counts[t];
  return counts;
}

TokenSet terminal_set(const ExprTree& tree) {
  TokenSet out;
  for (Token t : tree.nodes()) {
    if (is_terminal(t)) out.insert(t);
  }
  return out;
}

}  // namespace transgp
