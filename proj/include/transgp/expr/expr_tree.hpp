#ifndef TRANSGP_EXPR_EXPR_TREE_HPP_
#define TRANSGP_EXPR_EXPR_TREE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "transgp/common/rng.hpp"
#include "transgp/expr/features.hpp"
#include "transgp/expr/token.hpp"

namespace transgp {

using TokenSequence = std::vector<Token>;

// Binary expression tree stored as its pre-order node sequence. Always a
// complete prefix expression over functions and terminals (no START/END).
// Immutable once built.
class ExprTree {
 public:
  // The single-terminal tree NIQ, so containers of trees can be sized.
  ExprTree() : nodes_{Token::kNIQ} {}

  // Validates the prefix counter invariant; throws MalformedSequence.
  static ExprTree from_nodes(std::vector<Token> nodes);
  static ExprTree leaf(Token terminal);
  static ExprTree make(Token function, const ExprTree& left, const ExprTree& right);

  std::span<const Token> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  // Longest root-to-leaf path in edges; a single node has depth 0.
  int depth() const { return depth_; }
  Token root() const { return nodes_.front(); }

  // One past the last pre-order index of the subtree rooted at k.
  std::size_t subtree_end(std::size_t k) const;

  bool operator==(const ExprTree& other) const { return nodes_ == other.nodes_; }

 private:
  ExprTree(std::vector<Token> nodes, int depth)
      : nodes_(std::move(nodes)), depth_(depth) {}

  std::vector<Token> nodes_;
  int depth_ = 0;
};

// Priorities are clamped into [-kPriorityClamp, kPriorityClamp]; NaN maps to
// +kPriorityClamp so it never wins an argmin.
inline constexpr double kPriorityClamp = 1e12;

// Total over finite inputs. PDIV(a, 0) == 1.
double evaluate(const ExprTree& tree, const FeatureVector& features);

// [START] + pre-order + [END].
TokenSequence to_prefix_tokens(const ExprTree& tree);
// Inverse of to_prefix_tokens; throws MalformedSequence.
ExprTree from_prefix_tokens(std::span<const Token> sequence);

std::vector<int> to_token_ids(std::span<const Token> sequence);
TokenSequence from_token_ids(std::span<const int> ids);

// "-(TIS, PT)" style rendering.
std::string infix_string(const ExprTree& tree);
// Same rendering but nodes deeper than max_depth print as "...".
std::string infix_string_truncated(const ExprTree& tree, int max_depth);
// Parses the infix rendering back; throws ParseError.
ExprTree parse_infix(std::string_view text);

// Space-separated token names in pre-order; unique per tree.
std::string canonical_key(const ExprTree& tree);

// Throws IndexOutOfRange when k >= size.
ExprTree subtree_at(const ExprTree& tree, std::size_t k);
// Every rooted subtree, in pre-order of their roots.
std::vector<ExprTree> all_subtrees(const ExprTree& tree);
// Depth of every node, in pre-order.
std::vector<int> node_depths(const ExprTree& tree);
// Copy of `tree` with the subtree at k swapped for `replacement`.
ExprTree replace_subtree(const ExprTree& tree, std::size_t k, const ExprTree& replacement);

enum class InitMethod { kGrow, kFull };

// Draws a target depth uniformly from [min_depth, max_depth] and builds a
// tree of that depth (full) or at most that depth (grow).
ExprTree random_tree(int min_depth, int max_depth, InitMethod method, Rng& rng);
// Fair coin between grow and full.
ExprTree ramped_half_and_half(int min_depth, int max_depth, Rng& rng);

}  // namespace transgp

#endif  // TRANSGP_EXPR_EXPR_TREE_HPP_
