#include "transgp/gp/individual.hpp"

#include <algorithm>

#include "transgp/common/error.hpp"

namespace transgp {

double Individual::fitness_value() const {
  if (!fitness) throw RuntimeFailure("fitness read before evaluation");
  return *fitness;
}

bool fitter(const Individual& a, const Individual& b) {
  if (a.task != b.task) {
    throw CrossTaskComparison("fitness compared across tasks " + std::to_string(a.task) +
                              " and " + std::to_string(b.task));
  }
  return a.fitness_value() < b.fitness_value();
}

std::vector<std::size_t> members_of(const Population& pop, int task) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    if (pop[i].task == task) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> ranked_members(const Population& pop, int task) {
  std::vector<std::size_t> idx = members_of(pop, task);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return fitter(pop[a], pop[b]); });
  return idx;
}

}  // namespace transgp
