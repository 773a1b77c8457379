#include "transgp/gp/mutation.hpp"

#include <algorithm>

namespace transgp {

Individual standard_mutation(const Individual& parent, const MutationLimits& limits, Rng& rng) {
  Individual child;
  child.heuristic = parent.heuristic;
  child.task = parent.task;
  const RuleKind kind = rng.bernoulli(0.5) ? RuleKind::kSequencing : RuleKind::kRouting;
  const ExprTree& tree = parent.heuristic.rule(kind);
  const std::size_t k = rng.index(tree.size());
  const int room = limits.max_depth - node_depths(tree)[k];
  const int cap = std::max(0, std::min(limits.subtree_max_depth, room));
  const ExprTree replacement = random_tree(0, cap, InitMethod::kGrow, rng);
  child.heuristic.rule(kind) = replace_subtree(tree, k, replacement);
  return child;
}

int switch_task(int current, int num_tasks, Rng& rng) {
  if (num_tasks < 2) return current;
  const int pick = static_cast<int>(rng.index(static_cast<std::size_t>(num_tasks - 1)));
  return pick >= current ? pick + 1 : pick;
}

Individual tgp_mutation(const Individual& parent, const MutationLimits& limits, int num_tasks,
                        double switch_prob, Rng& rng) {
  Individual child = standard_mutation(parent, limits, rng);
  if (rng.bernoulli(switch_prob)) child.task = switch_task(child.task, num_tasks, rng);
  return child;
}

Individual StandardMutation::vary(const Individual& parent, int, Rng& rng) const {
  return standard_mutation(parent, limits_, rng);
}

Individual TaskTagMutation::vary(const Individual& parent, int num_tasks, Rng& rng) const {
  return tgp_mutation(parent, limits_, num_tasks, switch_prob_, rng);
}

}  // namespace transgp
