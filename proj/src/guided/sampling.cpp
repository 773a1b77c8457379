#include "transgp/guided/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"
#include "transgp/expr/prefix_stack.hpp"

namespace transgp {

void GuidedConfig::validate() const {
  if (!(temperature > 0.0)) throw InvalidConfig("temperature must be positive");
  if (task_switch_prob < 0.0 || task_switch_prob > 1.0) {
    throw InvalidConfig("task_switch_prob must be in [0, 1]");
  }
  if (max_regen_tokens < 1) throw InvalidConfig("max_regen_tokens must be positive");
  if (max_retries < 1) throw InvalidConfig("max_retries must be at least 1");
  if (max_depth < 0) throw InvalidConfig("max_depth must be non-negative");
  if (mix_ratio < 0.0 || mix_ratio > 1.0) throw InvalidConfig("mix_ratio must be in [0, 1]");
}

std::vector<double> masked_probabilities(std::span<const double> logits, const TokenSet& valid,
                                         double temperature) {
  if (valid.empty()) throw RuntimeFailure("no valid token to sample");
  std::vector<double> probs(logits.size(), 0.0);
  double mx = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (valid.contains(token_from_id(static_cast<int>(i)))) mx = std::max(mx, logits[i] / temperature);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (valid.contains(token_from_id(static_cast<int>(i)))) {
      probs[i] = std::exp(logits[i] / temperature - mx);
      sum += probs[i];
    }
  }
  for (double& p : probs) p /= sum;
  return probs;
}

namespace {

Token sample_from(std::span<const double> probs, const TokenSet& valid, Rng& rng) {
  const double u = rng.uniform01();
  double acc = 0.0;
  Token last = Token::kEnd;
  bool have_last = false;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    const Token t = token_from_id(static_cast<int>(i));
    acc += probs[i];
    last = t;
    have_last = true;
    if (u < acc) return t;
  }
  // Rounding left u above the final cumulative sum.
  if (!have_last) return valid.to_vector().front();
  return last;
}

void check_valid(Token t, const TokenSet& valid) {
  if (!valid.contains(t)) {
    throw RuntimeFailure("sampler emitted " + std::string(token_name(t)) +
                         " outside the valid set");
  }
}

}  // namespace

Token masked_sample(std::span<const double> logits, const TokenSet& valid, double temperature,
                    Rng& rng) {
  const std::vector<double> probs = masked_probabilities(logits, valid, temperature);
  const Token t = sample_from(probs, valid, rng);
  check_valid(t, valid);
  return t;
}

namespace {

void record_step(std::vector<TraceStep>& trace, std::span<const double> probs, Token chosen) {
  TraceStep s;
  s.step = static_cast<int>(trace.size()) + 1;
  s.generated = chosen;
  s.prob = probs[static_cast<std::size_t>(token_id(chosen))];
  std::vector<std::size_t> order(probs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return probs[a] > probs[b]; });
  s.top1 = token_from_id(static_cast<int>(order[0]));
  s.top1_prob = probs[order[0]];
  s.top2 = token_from_id(static_cast<int>(order[1]));
  s.top2_prob = probs[order[1]];
  trace.push_back(s);
}

// One attempt; returns false when the suffix outgrows max_regen_tokens.
bool try_generate(const TransformerParams<float>& model, std::span<const Token> kept,
                  std::span<const double> task, const GuidedConfig& cfg, Rng& rng,
                  const GenerationOptions& options, std::vector<Token>& out) {
  PrefixStack stack = PrefixStack::from_prefix(kept);
  std::vector<Token> seq;
  seq.reserve(kept.size() + 16);
  seq.push_back(Token::kStart);
  seq.insert(seq.end(), kept.begin(), kept.end());
  int generated = 0;
  if (options.trace != nullptr) options.trace->clear();
  Decoder<float> decoder(model, task);
  std::vector<double> logits;
  if (!stack.complete()) logits = decoder.feed(seq);
  while (!stack.complete()) {
    if (generated >= cfg.max_regen_tokens) return false;
    const TokenSet valid = valid_next_tokens(stack, cfg.max_depth);
    const std::vector<double> probs = masked_probabilities(logits, valid, cfg.temperature);
    const Token t = options.chooser ? options.chooser(probs, valid, rng) : sample_from(probs, valid, rng);
    check_valid(t, valid);
    if (options.trace != nullptr) record_step(*options.trace, probs, t);
    stack.push(t);
    seq.push_back(t);
    ++generated;
    if (!stack.complete()) logits = decoder.feed(t);
  }
  seq.push_back(Token::kEnd);
  out = std::move(seq);
  return true;
}

ExprTree generate_after(const TransformerParams<float>& model, std::span<const Token> kept,
                        std::span<const double> task, const GuidedConfig& cfg, Rng& rng,
                        const GenerationOptions& options) {
  cfg.validate();
  std::vector<Token> seq;
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    if (try_generate(model, kept, task, cfg, rng, options, seq)) return from_prefix_tokens(seq);
  }
  throw RegenerationOverflow("suffix exceeded " + std::to_string(cfg.max_regen_tokens) +
                             " tokens in " + std::to_string(cfg.max_retries) + " attempts");
}

}  // namespace

ExprTree regenerate_suffix(const TransformerParams<float>& model, const ExprTree& tree,
                           std::size_t k, std::span<const double> task, const GuidedConfig& cfg,
                           Rng& rng, const GenerationOptions& options) {
  if (k >= tree.size()) {
    throw IndexOutOfRange("mutation point " + std::to_string(k) + " outside tree of size " +
                          std::to_string(tree.size()));
  }
  return generate_after(model, tree.nodes().first(k), task, cfg, rng, options);
}

ExprTree generate_full_rule(const TransformerParams<float>& model, std::span<const double> task,
                            const GuidedConfig& cfg, Rng& rng, const GenerationOptions& options) {
  return generate_after(model, {}, task, cfg, rng, options);
}

std::string trace_csv(const std::vector<TraceStep>& trace) {
  CsvWriter csv({"step", "generated", "prob", "top1", "top1_prob", "top2", "top2_prob"});
  for (const TraceStep& s : trace) {
    csv.add_row({std::to_string(s.step), std::string(token_symbol(s.generated)),
                 format_fixed(s.prob, 4), std::string(token_symbol(s.top1)),
                 format_fixed(s.top1_prob, 4), std::string(token_symbol(s.top2)),
                 format_fixed(s.top2_prob, 4)});
  }
  return csv.str();
}

}  // namespace transgp
