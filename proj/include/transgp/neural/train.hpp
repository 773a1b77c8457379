#ifndef TRANSGP_NEURAL_TRAIN_HPP_
#define TRANSGP_NEURAL_TRAIN_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "transgp/dataset/elite_dataset.hpp"
#include "transgp/neural/transformer.hpp"

namespace transgp {

struct TrainConfig {
  int epochs = 50;
  int batch_size = 64;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
  double grad_clip = 1.0;
  double init_stddev = 0.02;
  std::uint64_t seed = 0;
  // Runs a sampled double-precision gradient check before training.
  bool check_gradients = false;

  // Throws InvalidConfig.
  void validate() const;
};

struct TrainResult {
  TransformerParams<float> params;
  // Mean loss of the untrained model over the whole corpus (no dropout).
  double initial_loss = 0.0;
  // Mean training loss of each epoch, dropout active.
  std::vector<double> epoch_losses;
  // Largest group error of the pre-training gradient check, when run.
  double gradient_check_error = 0.0;
};

using EpochHook = std::function<void(int epoch, double loss)>;

// Adam over shuffled mini-batches; deterministic in tcfg.seed. Throws
// EmptyDataset, SequenceTooLong.
TrainResult train(const EliteDataset& ds, const TransformerConfig& mcfg, const TrainConfig& tcfg,
                  const EpochHook& hook = {});

// Mean loss of `params` over the dataset in inference mode.
double dataset_loss(const TransformerParams<float>& params, const EliteDataset& ds);

// epoch,mean_loss
std::string loss_csv(const std::vector<double>& epoch_losses);

struct GradientCheckResult {
  std::vector<std::string> groups;
  std::vector<double> errors;  // ||analytic - numeric|| / max(||analytic||, ||numeric||)
  double max_error = 0.0;
};

// Central finite differences against loss_and_gradient without dropout.
// max_coords_per_group < 0 checks every coordinate; otherwise that many
// coordinates per tensor are sampled with `rng`.
GradientCheckResult gradient_check(const TransformerParams<double>& params,
                                   std::span<const SequenceInput> batch, double step = 1e-5,
                                   int max_coords_per_group = -1, Rng* rng = nullptr);

}  // namespace transgp

#endif  // TRANSGP_NEURAL_TRAIN_HPP_
