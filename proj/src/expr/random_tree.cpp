#include "transgp/expr/expr_tree.hpp"

namespace transgp {

namespace {

void grow_nodes(int depth, int target, InitMethod method, Rng& rng, std::vector<Token>& out) {
  bool function = false;
  if (depth < target) {
    if (method == InitMethod::kFull) {
      function = true;
    } else {
      // Grow picks uniformly over the whole primitive set.
      function = rng.index(kNumFunctions + kNumTerminals) < kNumFunctions;
    }
  }
  if (function) {
    out.push_back(kFunctions[rng.index(kNumFunctions)]);
    grow_nodes(depth + 1, target, method, rng, out);
    grow_nodes(depth + 1, target, method, rng, out);
  } else {
    out.push_back(kTerminals[rng.index(kNumTerminals)]);
  }
}

}  // namespace

ExprTree random_tree(int min_depth, int max_depth, InitMethod method, Rng& rng) {
  const int target = static_cast<int>(rng.uniform_int(min_depth, max_depth));
  std::vector<Token> nodes;
  grow_nodes(0, target, method, rng, nodes);
  return ExprTree::from_nodes(std::move(nodes));
}

ExprTree ramped_half_and_half(int min_depth, int max_depth, Rng& rng) {
  const InitMethod method = rng.bernoulli(0.5) ? InitMethod::kGrow : InitMethod::kFull;
  return random_tree(min_depth, max_depth, method, rng);
}

}  // namespace transgp
