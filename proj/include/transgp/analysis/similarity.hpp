#ifndef TRANSGP_ANALYSIS_SIMILARITY_HPP_
#define TRANSGP_ANALYSIS_SIMILARITY_HPP_

#include <map>

#include "transgp/expr/expr_tree.hpp"

namespace transgp {

// |a ∩ b| / |a ∪ b|, with J(∅, ∅) = 1.
double jaccard(const TokenSet& a, const TokenSet& b);

// 1 - |s1 - s2| / max(s1, s2). Throws InvalidSize when either is below 1.
double size_similarity(int s1, int s2);

// Occurrences of every token in the tree; counts sum to the tree size.
std::map<Token, int> usage_counts(const ExprTree& tree);

// Distinct terminals appearing in the tree.
TokenSet terminal_set(const ExprTree& tree);

}  // namespace transgp

#endif  // TRANSGP_ANALYSIS_SIMILARITY_HPP_
