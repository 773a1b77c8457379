#ifndef TRANSGP_GUIDED_GUIDED_MUTATION_HPP_
#define TRANSGP_GUIDED_GUIDED_MUTATION_HPP_

#include <atomic>
#include <vector>

#include "transgp/gp/mutation.hpp"
#include "transgp/guided/sampling.hpp"
#include "transgp/sim/task.hpp"

namespace transgp {

// The two rule generators, one per decision type.
struct RuleModels {
  TransformerParams<float> sequencing;
  TransformerParams<float> routing;

  const TransformerParams<float>& of(RuleKind kind) const {
    return kind == RuleKind::kSequencing ? sequencing : routing;
  }
};

// With probability task_switch_prob the child moves to another task and is
// conditioned on that task's embedding. One rule (fair coin) is rewritten from
// a uniform node onward by regenerate_suffix; the other is copied. A
// regeneration overflow falls back to standard mutation and bumps *fallbacks.
Individual guided_mutation(const Individual& parent, const RuleModels& models,
                           const std::vector<TaskSpec>& tasks, const GuidedConfig& cfg,
                           const MutationLimits& limits, Rng& rng,
                           std::atomic<long>* fallbacks = nullptr);

class GuidedVariation final : public Variation {
 public:
  GuidedVariation(const RuleModels& models, std::vector<TaskSpec> tasks, GuidedConfig cfg,
                  MutationLimits limits)
      : models_(models), tasks_(std::move(tasks)), cfg_(cfg), limits_(limits) {}

  Individual vary(const Individual& parent, int num_tasks, Rng& rng) const override;
  std::string name() const override { return "TransGP"; }
  long fallbacks() const { return fallbacks_.load(); }

 private:
  const RuleModels& models_;
  std::vector<TaskSpec> tasks_;
  GuidedConfig cfg_;
  MutationLimits limits_;
  mutable std::atomic<long> fallbacks_{0};
};

}  // namespace transgp

#endif  // TRANSGP_GUIDED_GUIDED_MUTATION_HPP_
