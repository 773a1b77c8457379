#ifndef TRANSGP_GP_MUTATION_HPP_
#define TRANSGP_GP_MUTATION_HPP_

#include <memory>
#include <string>

#include "transgp/common/rng.hpp"
#include "transgp/gp/individual.hpp"

namespace transgp {

struct MutationLimits {
  int max_depth = kDefaultMaxDepth;
  int subtree_max_depth = 4;
};

// Subtree mutation on one rule picked by a fair coin: a uniform node is
// replaced by a grow tree no deeper than subtree_max_depth and no deeper than
// the room left under max_depth. Task kept, fitness cleared.
Individual standard_mutation(const Individual& parent, const MutationLimits& limits, Rng& rng);

// Standard mutation followed, with probability switch_prob, by moving the
// offspring to a uniformly chosen other task.
Individual tgp_mutation(const Individual& parent, const MutationLimits& limits, int num_tasks,
                        double switch_prob, Rng& rng);

// Uniform pick among the tasks other than `current`; current itself when it
// is the only task.
int switch_task(int current, int num_tasks, Rng& rng);

// The single variation step plugged into the evolutionary loop. Must be pure
// given (parent, rng) because offspring are produced concurrently.
class Variation {
 public:
  virtual ~Variation() = default;
  virtual Individual vary(const Individual& parent, int num_tasks, Rng& rng) const = 0;
  virtual std::string name() const = 0;
};

class StandardMutation final : public Variation {
 public:
  explicit StandardMutation(MutationLimits limits) : limits_(limits) {}
  Individual vary(const Individual& parent, int num_tasks, Rng& rng) const override;
  std::string name() const override { return "GP"; }

 private:
  MutationLimits limits_;
};

class TaskTagMutation final : public Variation {
 public:
  TaskTagMutation(MutationLimits limits, double switch_prob)
      : limits_(limits), switch_prob_(switch_prob) {}
  Individual vary(const Individual& parent, int num_tasks, Rng& rng) const override;
  std::string name() const override { return "TGP"; }

 private:
  MutationLimits limits_;
  double switch_prob_;
};

}  // namespace transgp

#endif  // TRANSGP_GP_MUTATION_HPP_
