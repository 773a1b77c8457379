#include "transgp/neural/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"

namespace transgp {

void TrainConfig::validate() const {
  if (epochs < 0) throw InvalidConfig("epochs must be non-negative");
  if (batch_size < 1) throw InvalidConfig("batch_size must be positive");
  if (!(learning_rate > 0.0)) throw InvalidConfig("learning_rate must be positive");
  if (grad_clip < 0.0) throw InvalidConfig("grad_clip must be non-negative");
  if (init_stddev < 0.0) throw InvalidConfig("init_stddev must be non-negative");
}

namespace {

std::vector<SequenceInput> inputs_of(const EliteDataset& ds) {
  std::vector<SequenceInput> out;
  out.reserve(ds.records.size());
  for (const EliteRecord& r : ds.records) out.push_back({r.tokens, r.embedding});
  return out;
}

std::size_t prediction_count(std::span<const SequenceInput> batch) {
  std::size_t n = 0;
  for (const SequenceInput& s : batch) n += s.tokens.size() - 1;
  return n;
}

template <typename T>
void set_zero(TransformerParams<T>& p) {
  for (Mat<T>* m : p.tensors()) m->setZero();
}

}  // namespace

double dataset_loss(const TransformerParams<float>& params, const EliteDataset& ds) {
  const std::vector<SequenceInput> all = inputs_of(ds);
  double total = 0.0;
  std::size_t count = 0;
  constexpr std::size_t kChunk = 64;
  for (std::size_t i = 0; i < all.size(); i += kChunk) {
    const std::span<const SequenceInput> chunk(all.data() + i, std::min(kChunk, all.size() - i));
    const std::size_t n = prediction_count(chunk);
    total += loss_and_gradient<float>(params, chunk, nullptr, nullptr) * static_cast<double>(n);
    count += n;
  }
  return count == 0 ? 0.0 : total / static_cast<double>(count);
}

TrainResult train(const EliteDataset& ds, const TransformerConfig& mcfg, const TrainConfig& tcfg,
                  const EpochHook& hook) {
  mcfg.validate();
  tcfg.validate();
  if (ds.records.empty()) throw EmptyDataset("cannot train on an empty dataset");
  for (const EliteRecord& r : ds.records) {
    if (static_cast<int>(r.tokens.size()) > mcfg.max_len) {
      throw SequenceTooLong("record of " + std::to_string(r.tokens.size()) +
                            " tokens exceeds max_len " + std::to_string(mcfg.max_len));
    }
  }

  Rng init_rng(derive_seed(tcfg.seed, seed_stream::kInit, 0));
  Rng order_rng(derive_seed(tcfg.seed, seed_stream::kTraining, 0));
  Rng dropout_rng(derive_seed(tcfg.seed, seed_stream::kTraining, 1));

  TrainResult result;
  result.params = TransformerParams<float>::random(mcfg, tcfg.init_stddev, init_rng);
  const std::vector<SequenceInput> all = inputs_of(ds);

  if (tcfg.check_gradients) {
    const std::size_t n = std::min<std::size_t>(all.size(), 4);
    Rng coord_rng(derive_seed(tcfg.seed, seed_stream::kTraining, 2));
    const TransformerParams<double> p64 = result.params.cast<double>();
    result.gradient_check_error =
        gradient_check(p64, std::span<const SequenceInput>(all.data(), n), 1e-5, 8, &coord_rng)
            .max_error;
  }
  result.initial_loss = dataset_loss(result.params, ds);

  TransformerParams<float>& p = result.params;
  TransformerParams<float> grad = TransformerParams<float>::zeros(mcfg);
  TransformerParams<float> m1 = TransformerParams<float>::zeros(mcfg);
  TransformerParams<float> m2 = TransformerParams<float>::zeros(mcfg);
  auto pt = p.tensors();
  auto gt = grad.tensors();
  auto m1t = m1.tensors();
  auto m2t = m2.tensors();

  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<SequenceInput> batch;
  long step = 0;
  for (int epoch = 0; epoch < tcfg.epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[order_rng.index(i)]);
    double total = 0.0;
    std::size_t count = 0;
    for (std::size_t start = 0; start < order.size(); start += static_cast<std::size_t>(tcfg.batch_size)) {
      const std::size_t end = std::min(order.size(), start + static_cast<std::size_t>(tcfg.batch_size));
      batch.clear();
      for (std::size_t i = start; i < end; ++i) batch.push_back(all[order[i]]);
      set_zero(grad);
      const double loss = loss_and_gradient<float>(p, batch, &grad, &dropout_rng);
      const std::size_t n = prediction_count(batch);
      total += loss * static_cast<double>(n);
      count += n;

      double norm2 = 0.0;
      for (const Mat<float>* g : gt) norm2 += static_cast<double>(g->squaredNorm());
      const double norm = std::sqrt(norm2);
      const float clip = tcfg.grad_clip > 0.0 && norm > tcfg.grad_clip
                             ? static_cast<float>(tcfg.grad_clip / norm)
                             : 1.0f;
      ++step;
      const auto b1 = static_cast<float>(tcfg.beta1);
      const auto b2 = static_cast<float>(tcfg.beta2);
      const auto lr = static_cast<float>(tcfg.learning_rate * std::sqrt(1.0 - std::pow(tcfg.beta2, step)) /
                                         (1.0 - std::pow(tcfg.beta1, step)));
      const auto eps = static_cast<float>(tcfg.adam_eps);
      for (std::size_t t = 0; t < pt.size(); ++t) {
        const auto g = (gt[t]->array() * clip).eval();
        m1t[t]->array() = b1 * m1t[t]->array() + (1.0f - b1) * g;
        m2t[t]->array() = b2 * m2t[t]->array() + (1.0f - b2) * g.square();
        pt[t]->array() -= lr * m1t[t]->array() / (m2t[t]->array().sqrt() + eps);
      }
    }
    const double mean = count == 0 ? 0.0 : total / static_cast<double>(count);
    result.epoch_losses.push_back(mean);
    if (hook) hook(epoch, mean);
  }
  return result;
}

std::string loss_csv(const std::vector<double>& epoch_losses) {
  CsvWriter csv({"epoch", "mean_loss"});
  for (std::size_t i = 0; i < epoch_losses.size(); ++i) {
    csv.add_row({std::to_string(i), format_double(epoch_losses[i])});
  }
  return csv.str();
}

GradientCheckResult gradient_check(const TransformerParams<double>& params,
                                   std::span<const SequenceInput> batch, double step,
                                   int max_coords_per_group, Rng* rng) {
  TransformerParams<double> analytic = TransformerParams<double>::zeros(params.config);
  loss_and_gradient<double>(params, batch, &analytic, nullptr);

  TransformerParams<double> probe = params;
  auto probe_t = probe.tensors();
  auto grad_t = analytic.tensors();
  const auto names = params.tensor_names();
  GradientCheckResult out;
  for (std::size_t t = 0; t < probe_t.size(); ++t) {
    Mat<double>& w = *probe_t[t];
    std::vector<Eigen::Index> coords;
    if (max_coords_per_group < 0 || w.size() <= max_coords_per_group || rng == nullptr) {
      coords.resize(static_cast<std::size_t>(w.size()));
      std::iota(coords.begin(), coords.end(), Eigen::Index{0});
    } else {
      for (int i = 0; i < max_coords_per_group; ++i) {
        coords.push_back(static_cast<Eigen::Index>(rng->index(static_cast<std::size_t>(w.size()))));
      }
    }
    double diff2 = 0.0;
    double a2 = 0.0;
    double n2 = 0.0;
    for (Eigen::Index c : coords) {
      const double saved = w.data()[c];
      w.data()[c] = saved + step;
      const double up = loss_and_gradient<double>(probe, batch, nullptr, nullptr);
      w.data()[c] = saved - step;
      const double down = loss_and_gradient<double>(probe, batch, nullptr, nullptr);
      w.data()[c] = saved;
      const double numeric = (up - down) / (2.0 * step);
      const double a = grad_t[t]->data()[c];
      diff2 += (a - numeric) * (a - numeric);
      a2 += a * a;
      n2 += numeric * numeric;
    }
    const double denom = std::max(std::sqrt(a2), std::sqrt(n2));
    const double err = denom < 1e-12 ? 0.0 : std::sqrt(diff2) / denom;
    out.groups.push_back(names[t]);
    out.errors.push_back(err);
    out.max_error = std::max(out.max_error, err);
  }
  return out;
}

}  // namespace transgp
