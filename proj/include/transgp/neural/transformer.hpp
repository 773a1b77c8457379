#ifndef TRANSGP_NEURAL_TRANSFORMER_HPP_
#define TRANSGP_NEURAL_TRANSFORMER_HPP_

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "transgp/common/rng.hpp"
#include "transgp/expr/expr_tree.hpp"

namespace transgp {

struct TransformerConfig {
  int d = 256;
  int heads = 4;
  int layers = 4;
  double dropout = 0.1;
  int vocab = kVocabSize;
  int max_len = 513;
  int d_task = 5;
  int ff = 1024;

  // Throws InvalidConfig.
  void validate() const;
  bool operator==(const TransformerConfig&) const = default;
};

template <typename T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

// Linear maps are stored out x in and applied as X * W^T; biases and
// layer-norm gains are 1 x n rows.
template <typename T>
struct LayerParams {
  Mat<T> ln1_gain, ln1_bias;
  Mat<T> wq, wk, wv, wo;
  Mat<T> ln2_gain, ln2_bias;
  Mat<T> w1, b1, w2, b2;
};

// Tensor order (used by the optimiser, the gradient check and the model
// file): token_embedding, position_embedding, task_weight, task_bias, then per
// layer ln1_gain, ln1_bias, wq, wk, wv, wo, ln2_gain, ln2_bias, w1, b1, w2, b2,
// then out_weight, out_bias.
template <typename T>
struct TransformerParams {
  TransformerConfig config;
  Mat<T> token_embedding;     // vocab x d
  Mat<T> position_embedding;  // max_len x d
  Mat<T> task_weight;         // d x d_task
  Mat<T> task_bias;           // 1 x d
  std::vector<LayerParams<T>> layers;
  Mat<T> out_weight;  // vocab x d
  Mat<T> out_bias;    // 1 x vocab

  // Every tensor zero, layer-norm gains included.
  static TransformerParams zeros(const TransformerConfig& cfg);
  // Weights ~ N(0, stddev^2), gains 1, biases 0.
  static TransformerParams random(const TransformerConfig& cfg, double stddev, Rng& rng);

  std::vector<Mat<T>*> tensors();
  std::vector<const Mat<T>*> tensors() const;
  std::vector<std::string> tensor_names() const;
  std::size_t parameter_count() const;

  template <typename U>
  TransformerParams<U> cast() const {
    TransformerParams<U> out = TransformerParams<U>::zeros(config);
    auto src = tensors();
    auto dst = out.tensors();
    for (std::size_t i = 0; i < src.size(); ++i) *dst[i] = src[i]->template cast<U>();
    return out;
  }
};

// One training or inference sequence: START-prefixed tokens and the task
// conditioning vector.
struct SequenceInput {
  std::span<const Token> tokens;
  std::span<const double> task;
};

// Logits, one row per position (inference mode, no dropout). Throws
// SequenceTooLong.
template <typename T>
Mat<T> forward(const TransformerParams<T>& params, const SequenceInput& input);

// Last row of forward(); prefix must start with START.
template <typename T>
std::vector<double> next_token_logits(const TransformerParams<T>& params,
                                      std::span<const Token> prefix, std::span<const double> task);

// Incremental decoding with cached keys and values. Feeding a prefix and then
// one token at a time gives the logits next_token_logits would compute on the
// whole sequence, at a cost linear in its length per step.
template <typename T>
class Decoder {
 public:
  Decoder(const TransformerParams<T>& params, std::span<const double> task);

  // Appends tokens (the first feed must start with START) and returns the
  // next-token logits after the last one. Throws SequenceTooLong.
  std::vector<double> feed(std::span<const Token> tokens);
  std::vector<double> feed(Token t) { return feed(std::span<const Token>(&t, 1)); }
  int length() const { return length_; }

 private:
  const TransformerParams<T>& params_;
  Mat<T> cond_;
  std::vector<Mat<T>> keys_, values_;  // per layer, max_len x d
  int length_ = 0;
};

// Mean next-token negative log-likelihood: row i of logits predicts tokens[i+1].
template <typename T>
double sequence_loss(const Mat<T>& logits, std::span<const Token> tokens);

// Mean NLL over every prediction position of the batch and, when grad is
// non-null, the gradient of that mean added into *grad. A non-null
// dropout_rng turns on training-mode dropout.
template <typename T>
double loss_and_gradient(const TransformerParams<T>& params, std::span<const SequenceInput> batch,
                         TransformerParams<T>* grad, Rng* dropout_rng);

// Attention probabilities of every layer and head for one sequence, layer
// major. Exposed for inspection and tests.
template <typename T>
std::vector<Mat<T>> attention_maps(const TransformerParams<T>& params, const SequenceInput& input);

}  // namespace transgp

#endif  // TRANSGP_NEURAL_TRANSFORMER_HPP_
