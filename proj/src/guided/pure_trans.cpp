#include "transgp/guided/pure_trans.hpp"

#include "transgp/common/error.hpp"
#include "transgp/common/parallel.hpp"
#include "transgp/dataset/elite_dataset.hpp"
#include "transgp/gp/evolution.hpp"

namespace transgp {

PureTransResult pure_trans_baseline(const RuleModels& models, const TaskSpec& task,
                                    const ScenarioConfig& shop, int n,
                                    const std::vector<std::uint64_t>& test_seeds,
                                    const GuidedConfig& cfg, std::uint64_t seed, int threads) {
  if (n < 1) throw InvalidConfig("PureTrans needs at least one sample");
  const std::vector<double> e = task_embedding(task);
  PureTransResult out;
  out.heuristics.resize(static_cast<std::size_t>(n));
  out.test_values.resize(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, seed_stream::kSampling, i));
    ExprTree seq = generate_full_rule(models.sequencing, e, cfg, rng);
    ExprTree route = generate_full_rule(models.routing, e, cfg, rng);
    out.heuristics[i] = Heuristic{std::move(seq), std::move(route)};
    out.test_values[i] = test_heuristic(out.heuristics[i], task, shop, test_seeds);
  });
  out.stats = summarize(out.test_values);
  return out;
}

}  // namespace transgp
