#ifndef TRANSGP_GP_INDIVIDUAL_HPP_
#define TRANSGP_GP_INDIVIDUAL_HPP_

#include <optional>
#include <vector>

#include "transgp/expr/heuristic.hpp"

namespace transgp {

// A heuristic tagged with the task (index into the run's task list) it is
// being evolved for. Fitness is the objective on that task; lower is better.
struct Individual {
  Heuristic heuristic;
  int task = 0;
  std::optional<double> fitness;

  // Throws RuntimeFailure when fitness has not been evaluated yet.
  double fitness_value() const;
};

using Population = std::vector<Individual>;

// True when a is strictly fitter than b. The only way fitness values are
// compared anywhere; throws CrossTaskComparison when the tasks differ.
bool fitter(const Individual& a, const Individual& b);

// Population indices of the individuals assigned to `task`, in order.
std::vector<std::size_t> members_of(const Population& pop, int task);

// Members of `task` sorted best first (ties keep population order).
std::vector<std::size_t> ranked_members(const Population& pop, int task);

}  // namespace transgp

#endif  // TRANSGP_GP_INDIVIDUAL_HPP_
