#ifndef TRANSGP_GUIDED_PURE_TRANS_HPP_
#define TRANSGP_GUIDED_PURE_TRANS_HPP_

#include <cstdint>
#include <vector>

#include "transgp/common/stats.hpp"
#include "transgp/guided/guided_mutation.hpp"
#include "transgp/sim/instance.hpp"

namespace transgp {

struct PureTransResult {
  std::vector<Heuristic> heuristics;
  std::vector<double> test_values;
  SummaryStats stats;
};

// Samples n (sequencing, routing) pairs conditioned on `task`, pair i from
// (seed, kSampling, i), and tests each on the given seeds.
PureTransResult pure_trans_baseline(const RuleModels& models, const TaskSpec& task,
                                    const ScenarioConfig& shop, int n,
                                    const std::vector<std::uint64_t>& test_seeds,
                                    const GuidedConfig& cfg, std::uint64_t seed, int threads = 1);

}  // namespace transgp

#endif  // TRANSGP_GUIDED_PURE_TRANS_HPP_
