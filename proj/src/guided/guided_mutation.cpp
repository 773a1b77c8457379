#include "transgp/guided/guided_mutation.hpp"

#include "transgp/common/error.hpp"
#include "transgp/dataset/elite_dataset.hpp"

namespace transgp {

Individual guided_mutation(const Individual& parent, const RuleModels& models,
                           const std::vector<TaskSpec>& tasks, const GuidedConfig& cfg,
                           const MutationLimits& limits, Rng& rng, std::atomic<long>* fallbacks) {
  Individual child;
  child.heuristic = parent.heuristic;
  child.task = parent.task;
  if (rng.bernoulli(cfg.task_switch_prob)) {
    child.task = switch_task(child.task, static_cast<int>(tasks.size()), rng);
  }
  const std::vector<double> e = task_embedding(tasks.at(static_cast<std::size_t>(child.task)));
  const RuleKind kind = rng.bernoulli(0.5) ? RuleKind::kSequencing : RuleKind::kRouting;
  const ExprTree& tree = parent.heuristic.rule(kind);
  const std::size_t k = rng.index(tree.size());
  try {
    child.heuristic.rule(kind) = regenerate_suffix(models.of(kind), tree, k, e, cfg, rng);
  } catch (const RegenerationOverflow&) {
    if (fallbacks != nullptr) ++*fallbacks;
    Individual fallback = standard_mutation(parent, limits, rng);
    fallback.task = child.task;
    return fallback;
  }
  return child;
}

Individual GuidedVariation::vary(const Individual& parent, int num_tasks, Rng& rng) const {
  if (num_tasks != static_cast<int>(tasks_.size())) {
    throw InvalidConfig("guided variation built for " + std::to_string(tasks_.size()) +
                        " tasks, run has " + std::to_string(num_tasks));
  }
  if (cfg_.mix_ratio < 1.0 && !rng.bernoulli(cfg_.mix_ratio)) {
    Individual child = standard_mutation(parent, limits_, rng);
    if (rng.bernoulli(cfg_.task_switch_prob)) child.task = switch_task(child.task, num_tasks, rng);
    return child;
  }
  return guided_mutation(parent, models_, tasks_, cfg_, limits_, rng, &fallbacks_);
}

}  // namespace transgp
