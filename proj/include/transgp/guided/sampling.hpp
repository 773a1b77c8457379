#ifndef TRANSGP_GUIDED_SAMPLING_HPP_
#define TRANSGP_GUIDED_SAMPLING_HPP_

#include <functional>
#include <span>
#include <vector>

#include "transgp/common/rng.hpp"
#include "transgp/expr/expr_tree.hpp"
#include "transgp/neural/transformer.hpp"

namespace transgp {

struct GuidedConfig {
  double temperature = 1.0;
  double task_switch_prob = 0.1;
  int max_regen_tokens = 511;
  int max_retries = 5;
  int max_depth = kDefaultMaxDepth;
  // Share of offspring produced by guided mutation; the rest use standard
  // mutation.
  double mix_ratio = 1.0;

  // Throws InvalidConfig.
  void validate() const;
};

// softmax(logits / temperature) restricted to `valid`; every other token gets
// probability exactly 0. Throws RuntimeFailure when valid is empty.
std::vector<double> masked_probabilities(std::span<const double> logits, const TokenSet& valid,
                                         double temperature);

// Draws from masked_probabilities. The returned token is always in `valid`.
Token masked_sample(std::span<const double> logits, const TokenSet& valid, double temperature,
                    Rng& rng);

// One generation step in the layout of a mutation trace table.
struct TraceStep {
  int step = 0;
  Token generated = Token::kEnd;
  double prob = 0.0;
  Token top1 = Token::kEnd;
  double top1_prob = 0.0;
  Token top2 = Token::kEnd;
  double top2_prob = 0.0;
};

// Replaces sampling, e.g. to replay a known token sequence. Receives the
// masked distribution and must return a token from `valid`.
using TokenChooser =
    std::function<Token(std::span<const double> probs, const TokenSet& valid, Rng& rng)>;

struct GenerationOptions {
  std::vector<TraceStep>* trace = nullptr;
  TokenChooser chooser;
};

// Keeps pre-order nodes [0, k) of `tree` and lets the model write the rest:
// each step masks the next-token logits with the prefix stack (depth capped
// at cfg.max_depth) and samples at cfg.temperature until the expression is
// complete. Retries up to cfg.max_retries times when a suffix runs past
// cfg.max_regen_tokens, then throws RegenerationOverflow.
ExprTree regenerate_suffix(const TransformerParams<float>& model, const ExprTree& tree,
                           std::size_t k, std::span<const double> task, const GuidedConfig& cfg,
                           Rng& rng, const GenerationOptions& options = {});

// A whole rule from an empty prefix.
ExprTree generate_full_rule(const TransformerParams<float>& model, std::span<const double> task,
                            const GuidedConfig& cfg, Rng& rng,
                            const GenerationOptions& options = {});

// Renders a trace as CSV: step,generated,prob,top1,top1_prob,top2,top2_prob.
std::string trace_csv(const std::vector<TraceStep>& trace);

}  // namespace transgp

#endif  // TRANSGP_GUIDED_SAMPLING_HPP_
