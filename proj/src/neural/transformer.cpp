#include "transgp/neural/transformer.hpp"

#include <cmath>

#include "transgp/common/error.hpp"

namespace transgp {

void TransformerConfig::validate() const {
  if (d < 1 || heads < 1 || layers < 0 || ff < 1) {
    throw InvalidConfig("transformer dimensions must be positive");
  }
  if (d % heads != 0) throw InvalidConfig("d must be divisible by heads");
  if (dropout < 0.0 || dropout >= 1.0) throw InvalidConfig("dropout must be in [0, 1)");
  if (vocab != kVocabSize) throw InvalidConfig("vocab must be " + std::to_string(kVocabSize));
  if (max_len < 2) throw InvalidConfig("max_len must be at least 2");
  if (d_task < 1) throw InvalidConfig("d_task must be positive");
}

template <typename T>
TransformerParams<T> TransformerParams<T>::zeros(const TransformerConfig& cfg) {
  cfg.validate();
  TransformerParams p;
  p.config = cfg;
  p.token_embedding = Mat<T>::Zero(cfg.vocab, cfg.d);
  p.position_embedding = Mat<T>::Zero(cfg.max_len, cfg.d);
  p.task_weight = Mat<T>::Zero(cfg.d, cfg.d_task);
  p.task_bias = Mat<T>::Zero(1, cfg.d);
  p.layers.resize(static_cast<std::size_t>(cfg.layers));
  for (LayerParams<T>& l : p.layers) {
    l.ln1_gain = Mat<T>::Zero(1, cfg.d);
    l.ln1_bias = Mat<T>::Zero(1, cfg.d);
    l.wq = Mat<T>::Zero(cfg.d, cfg.d);
    l.wk = Mat<T>::Zero(cfg.d, cfg.d);
    l.wv = Mat<T>::Zero(cfg.d, cfg.d);
    l.wo = Mat<T>::Zero(cfg.d, cfg.d);
    l.ln2_gain = Mat<T>::Zero(1, cfg.d);
    l.ln2_bias = Mat<T>::Zero(1, cfg.d);
    l.w1 = Mat<T>::Zero(cfg.ff, cfg.d);
    l.b1 = Mat<T>::Zero(1, cfg.ff);
    l.w2 = Mat<T>::Zero(cfg.d, cfg.ff);
    l.b2 = Mat<T>::Zero(1, cfg.d);
  }
  p.out_weight = Mat<T>::Zero(cfg.vocab, cfg.d);
  p.out_bias = Mat<T>::Zero(1, cfg.vocab);
  return p;
}

template <typename T>
TransformerParams<T> TransformerParams<T>::random(const TransformerConfig& cfg, double stddev,
                                                  Rng& rng) {
  TransformerParams p = zeros(cfg);
  auto fill = [&](Mat<T>& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, c) = static_cast<T>(stddev * rng.normal());
    }
  };
  fill(p.token_embedding);
  fill(p.position_embedding);
  fill(p.task_weight);
  for (LayerParams<T>& l : p.layers) {
    l.ln1_gain.setOnes();
    l.ln2_gain.setOnes();
    fill(l.wq);
    fill(l.wk);
    fill(l.wv);
    fill(l.wo);
    fill(l.w1);
    fill(l.w2);
  }
  fill(p.out_weight);
  return p;
}

template <typename T>
std::vector<Mat<T>*> TransformerParams<T>::tensors() {
  std::vector<Mat<T>*> out{&token_embedding, &position_embedding, &task_weight, &task_bias};
  for (LayerParams<T>& l : layers) {
    out.insert(out.end(), {&l.ln1_gain, &l.ln1_bias, &l.wq, &l.wk, &l.wv, &l.wo, &l.ln2_gain,
                           &l.ln2_bias, &l.w1, &l.b1, &l.w2, &l.b2});
  }
  out.push_back(&out_weight);
  out.push_back(&out_bias);
  return out;
}

template <typename T>
std::vector<const Mat<T>*> TransformerParams<T>::tensors() const {
  auto mut = const_cast<TransformerParams*>(this)->tensors();
  return {mut.begin(), mut.end()};
}

template <typename T>
std::vector<std::string> TransformerParams<T>::tensor_names() const {
  std::vector<std::string> out{"token_embedding", "position_embedding", "task_weight",
                               "task_bias"};
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const std::string p = "layer" + std::to_string(i) + ".";
    for (const char* n : {"ln1_gain", "ln1_bias", "wq", "wk", "wv", "wo", "ln2_gain", "ln2_bias",
                          "w1", "b1", "w2", "b2"}) {
      out.push_back(p + n);
    }
  }
  out.push_back("out_weight");
  out.push_back("out_bias");
  return out;
}

template <typename T>
std::size_t TransformerParams<T>::parameter_count() const {
  std::size_t n = 0;
  for (const Mat<T>* m : tensors()) n += static_cast<std::size_t>(m->size());
  return n;
}

namespace {

constexpr double kLayerNormEps = 1e-5;

template <typename T>
struct LayerNormCache {
  Mat<T> xhat;
  Eigen::Matrix<T, Eigen::Dynamic, 1> inv_std;
};

template <typename T>
Mat<T> layer_norm(const Mat<T>& x, const Mat<T>& gain, const Mat<T>& bias, LayerNormCache<T>& c) {
  const T n = static_cast<T>(x.cols());
  const Eigen::Matrix<T, Eigen::Dynamic, 1> mean = x.rowwise().sum() / n;
  c.xhat = x.colwise() - mean;
  const Eigen::Matrix<T, Eigen::Dynamic, 1> var = c.xhat.array().square().rowwise().sum() / n;
  c.inv_std = (var.array() + static_cast<T>(kLayerNormEps)).rsqrt();
  c.xhat.array().colwise() *= c.inv_std.array();
  Mat<T> y = c.xhat.array().rowwise() * gain.row(0).array();
  y.rowwise() += bias.row(0);
  return y;
}

template <typename T>
Mat<T> layer_norm_backward(const Mat<T>& dy, const Mat<T>& gain, const LayerNormCache<T>& c,
                           Mat<T>& dgain, Mat<T>& dbias) {
  dgain.row(0) += (dy.array() * c.xhat.array()).colwise().sum().matrix();
  dbias.row(0) += dy.colwise().sum();
  const Mat<T> dxhat = dy.array().rowwise() * gain.row(0).array();
  const T n = static_cast<T>(dy.cols());
  const Eigen::Matrix<T, Eigen::Dynamic, 1> m1 = dxhat.rowwise().sum() / n;
  const Eigen::Matrix<T, Eigen::Dynamic, 1> m2 =
      (dxhat.array() * c.xhat.array()).rowwise().sum() / n;
  Mat<T> dx = c.xhat.array().colwise() * m2.array();
  dx = (dxhat.array() - dx.array()).colwise() - m1.array();
  dx.array().colwise() *= c.inv_std.array();
  return dx;
}

// tanh approximation of GELU, applied elementwise
template <typename T>
struct Gelu {
  static constexpr T k = static_cast<T>(0.7978845608028654);
  static constexpr T a = static_cast<T>(0.044715);
  static Mat<T> value(const Mat<T>& u) {
    const auto x = u.array();
    return (T(0.5) * x * (T(1) + (k * (x + a * x.cube())).tanh())).matrix();
  }
  static Mat<T> derivative(const Mat<T>& u) {
    const auto x = u.array();
    const Eigen::Array<T, Eigen::Dynamic, Eigen::Dynamic> t = (k * (x + a * x.cube())).tanh();
    return (T(0.5) * (T(1) + t) + T(0.5) * x * (T(1) - t.square()) * k * (T(1) + T(3) * a * x.square()))
        .matrix();
  }
};

template <typename T>
void dropout_mask(Mat<T>& mask, Eigen::Index rows, Eigen::Index cols, double rate, Rng* rng) {
  if (rng == nullptr || rate <= 0.0) {
    mask.resize(0, 0);
    return;
  }
  mask.resize(rows, cols);
  const T keep = static_cast<T>(1.0 / (1.0 - rate));
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) mask(r, c) = rng->uniform01() < rate ? T(0) : keep;
  }
}

template <typename T>
void apply_mask(Mat<T>& x, const Mat<T>& mask) {
  if (mask.size() > 0) x.array() *= mask.array();
}

struct Segment {
  Eigen::Index offset;
  Eigen::Index length;
};

template <typename T>
struct LayerCache {
  LayerNormCache<T> ln1, ln2;
  Mat<T> a;        // ln1 output
  Mat<T> q, k, v;  // projections
  std::vector<Mat<T>> probs;  // per segment, per head
  Mat<T> o;        // concatenated head outputs
  Mat<T> mask1;
  Mat<T> b;        // ln2 output
  Mat<T> u;        // pre-activation
  Mat<T> g;        // activation
  Mat<T> mask2;
};

template <typename T>
struct ForwardCache {
  std::vector<Segment> segments;
  std::vector<LayerCache<T>> layers;
  Mat<T> final_x;
};

// Runs the decoder on all sequences packed row-wise; attention never crosses
// a segment boundary.
template <typename T>
Mat<T> packed_forward(const TransformerParams<T>& p, std::span<const SequenceInput> batch,
                      ForwardCache<T>& cache, Rng* dropout_rng) {
  const TransformerConfig& cfg = p.config;
  Eigen::Index total = 0;
  cache.segments.clear();
  for (const SequenceInput& s : batch) {
    const auto len = static_cast<Eigen::Index>(s.tokens.size());
    if (len > cfg.max_len) {
      throw SequenceTooLong("sequence of " + std::to_string(len) + " tokens exceeds max_len " +
                            std::to_string(cfg.max_len));
    }
    if (len < 1) throw SequenceTooLong("empty sequence");
    if (static_cast<int>(s.task.size()) != cfg.d_task) {
      throw ShapeMismatch("task vector has " + std::to_string(s.task.size()) +
                          " entries, expected " + std::to_string(cfg.d_task));
    }
    cache.segments.push_back({total, len});
    total += len;
  }

  Mat<T> x(total, cfg.d);
  for (std::size_t s = 0; s < batch.size(); ++s) {
    const Segment seg = cache.segments[s];
    Eigen::Matrix<T, Eigen::Dynamic, 1> e(cfg.d_task);
    for (int i = 0; i < cfg.d_task; ++i) e(i) = static_cast<T>(batch[s].task[static_cast<std::size_t>(i)]);
    const Mat<T> cond = (p.task_weight * e).transpose() + p.task_bias;
    for (Eigen::Index i = 0; i < seg.length; ++i) {
      const int tok = token_id(batch[s].tokens[static_cast<std::size_t>(i)]);
      x.row(seg.offset + i) = p.token_embedding.row(tok) + p.position_embedding.row(i) + cond.row(0);
    }
  }

  const int dh = cfg.d / cfg.heads;
  const T scale = T(1) / std::sqrt(static_cast<T>(dh));
  cache.layers.resize(p.layers.size());
  for (std::size_t li = 0; li < p.layers.size(); ++li) {
    const LayerParams<T>& l = p.layers[li];
    LayerCache<T>& c = cache.layers[li];
    c.a = layer_norm(x, l.ln1_gain, l.ln1_bias, c.ln1);
    c.q.noalias() = c.a * l.wq.transpose();
    c.k.noalias() = c.a * l.wk.transpose();
    c.v.noalias() = c.a * l.wv.transpose();
    c.o.resize(total, cfg.d);
    c.probs.clear();
    for (const Segment& seg : cache.segments) {
      for (int h = 0; h < cfg.heads; ++h) {
        const auto qh = c.q.block(seg.offset, h * dh, seg.length, dh);
        const auto kh = c.k.block(seg.offset, h * dh, seg.length, dh);
        const auto vh = c.v.block(seg.offset, h * dh, seg.length, dh);
        Mat<T> s = (qh * kh.transpose()) * scale;
        for (Eigen::Index i = 0; i < seg.length; ++i) {
          const T mx = s.row(i).head(i + 1).maxCoeff();
          T sum = T(0);
          for (Eigen::Index j = 0; j <= i; ++j) {
            s(i, j) = std::exp(s(i, j) - mx);
            sum += s(i, j);
          }
          for (Eigen::Index j = 0; j <= i; ++j) s(i, j) /= sum;
          for (Eigen::Index j = i + 1; j < seg.length; ++j) s(i, j) = T(0);
        }
        c.o.block(seg.offset, h * dh, seg.length, dh).noalias() = s * vh;
        c.probs.push_back(std::move(s));
      }
    }
    Mat<T> attn = c.o * l.wo.transpose();
    dropout_mask(c.mask1, total, cfg.d, cfg.dropout, dropout_rng);
    apply_mask(attn, c.mask1);
    x += attn;

    c.b = layer_norm(x, l.ln2_gain, l.ln2_bias, c.ln2);
    c.u = c.b * l.w1.transpose();
    c.u.rowwise() += l.b1.row(0);
    c.g = Gelu<T>::value(c.u);
    Mat<T> f = c.g * l.w2.transpose();
    f.rowwise() += l.b2.row(0);
    dropout_mask(c.mask2, total, cfg.d, cfg.dropout, dropout_rng);
    apply_mask(f, c.mask2);
    x += f;
  }
  cache.final_x = x;
  Mat<T> logits = x * p.out_weight.transpose();
  logits.rowwise() += p.out_bias.row(0);
  return logits;
}

}  // namespace

template <typename T>
Decoder<T>::Decoder(const TransformerParams<T>& params, std::span<const double> task) : params_(params) {
  const TransformerConfig& cfg = params.config;
  if (static_cast<int>(task.size()) != cfg.d_task) {
    throw ShapeMismatch("task vector has " + std::to_string(task.size()) + " entries, expected " +
                        std::to_string(cfg.d_task));
  }
  Eigen::Matrix<T, Eigen::Dynamic, 1> e(cfg.d_task);
  for (int i = 0; i < cfg.d_task; ++i) e(i) = static_cast<T>(task[static_cast<std::size_t>(i)]);
  cond_ = (params.task_weight * e).transpose() + params.task_bias;
  keys_.assign(params.layers.size(), Mat<T>(cfg.max_len, cfg.d));
  values_.assign(params.layers.size(), Mat<T>(cfg.max_len, cfg.d));
}

template <typename T>
std::vector<double> Decoder<T>::feed(std::span<const Token> tokens) {
  const TransformerParams<T>& p = params_;
  const TransformerConfig& cfg = p.config;
  const auto n = static_cast<Eigen::Index>(tokens.size());
  if (n == 0) throw MalformedSequence("nothing to decode");
  if (length_ == 0 && tokens.front() != Token::kStart) {
    throw MalformedSequence("generation prefix must start with START");
  }
  if (length_ + n > cfg.max_len) {
    throw SequenceTooLong("sequence of " + std::to_string(length_ + n) + " tokens exceeds max_len " +
                          std::to_string(cfg.max_len));
  }
  const Eigen::Index start = length_;
  Mat<T> x(n, cfg.d);
  for (Eigen::Index i = 0; i < n; ++i) {
    x.row(i) = p.token_embedding.row(token_id(tokens[static_cast<std::size_t>(i)])) +
               p.position_embedding.row(start + i) + cond_.row(0);
  }
  const int dh = cfg.d / cfg.heads;
  const T scale = T(1) / std::sqrt(static_cast<T>(dh));
  LayerNormCache<T> scratch;
  for (std::size_t li = 0; li < p.layers.size(); ++li) {
    const LayerParams<T>& l = p.layers[li];
    const Mat<T> a = layer_norm(x, l.ln1_gain, l.ln1_bias, scratch);
    const Mat<T> q = a * l.wq.transpose();
    keys_[li].middleRows(start, n).noalias() = a * l.wk.transpose();
    values_[li].middleRows(start, n).noalias() = a * l.wv.transpose();
    const Eigen::Index len = start + n;
    Mat<T> o(n, cfg.d);
    for (int h = 0; h < cfg.heads; ++h) {
      const auto kh = keys_[li].block(0, h * dh, len, dh);
      const auto vh = values_[li].block(0, h * dh, len, dh);
      Mat<T> s = (q.middleCols(h * dh, dh) * kh.transpose()) * scale;
      for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index visible = start + i + 1;
        const T mx = s.row(i).head(visible).maxCoeff();
        T sum = T(0);
        for (Eigen::Index j = 0; j < visible; ++j) {
          s(i, j) = std::exp(s(i, j) - mx);
          sum += s(i, j);
        }
        for (Eigen::Index j = 0; j < visible; ++j) s(i, j) /= sum;
        for (Eigen::Index j = visible; j < len; ++j) s(i, j) = T(0);
      }
      o.middleCols(h * dh, dh).noalias() = s * vh;
    }
    x += o * l.wo.transpose();
    const Mat<T> b = layer_norm(x, l.ln2_gain, l.ln2_bias, scratch);
    Mat<T> u = b * l.w1.transpose();
    u.rowwise() += l.b1.row(0);
    Mat<T> f = Gelu<T>::value(u) * l.w2.transpose();
    f.rowwise() += l.b2.row(0);
    x += f;
  }
  length_ += static_cast<int>(n);
  Mat<T> logits = x.row(n - 1) * p.out_weight.transpose();
  logits += p.out_bias;
  std::vector<double> row(static_cast<std::size_t>(logits.cols()));
  for (Eigen::Index j = 0; j < logits.cols(); ++j) row[static_cast<std::size_t>(j)] = static_cast<double>(logits(0, j));
  return row;
}

template <typename T>
Mat<T> forward(const TransformerParams<T>& params, const SequenceInput& input) {
  ForwardCache<T> cache;
  return packed_forward(params, std::span<const SequenceInput>(&input, 1), cache, nullptr);
}

template <typename T>
std::vector<double> next_token_logits(const TransformerParams<T>& params,
                                      std::span<const Token> prefix, std::span<const double> task) {
  if (prefix.empty() || prefix.front() != Token::kStart) {
    throw MalformedSequence("generation prefix must start with START");
  }
  const Mat<T> logits = forward(params, SequenceInput{prefix, task});
  std::vector<double> row(static_cast<std::size_t>(logits.cols()));
  for (Eigen::Index j = 0; j < logits.cols(); ++j) {
    row[static_cast<std::size_t>(j)] = static_cast<double>(logits(logits.rows() - 1, j));
  }
  return row;
}

template <typename T>
double sequence_loss(const Mat<T>& logits, std::span<const Token> tokens) {
  const auto n = static_cast<Eigen::Index>(tokens.size());
  if (n < 2) return 0.0;
  double total = 0.0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double mx = static_cast<double>(logits.row(i).maxCoeff());
    double sum = 0.0;
    for (Eigen::Index j = 0; j < logits.cols(); ++j) sum += std::exp(static_cast<double>(logits(i, j)) - mx);
    const int target = token_id(tokens[static_cast<std::size_t>(i + 1)]);
    total += mx + std::log(sum) - static_cast<double>(logits(i, target));
  }
  return total / static_cast<double>(n - 1);
}

template <typename T>
double loss_and_gradient(const TransformerParams<T>& p, std::span<const SequenceInput> batch,
                         TransformerParams<T>* grad, Rng* dropout_rng) {
  const TransformerConfig& cfg = p.config;
  ForwardCache<T> cache;
  const Mat<T> logits = packed_forward(p, batch, cache, dropout_rng);

  Eigen::Index count = 0;
  for (const Segment& seg : cache.segments) count += seg.length - 1;
  if (count == 0) return 0.0;
  const T inv_count = T(1) / static_cast<T>(count);

  double total = 0.0;
  Mat<T> dlogits = Mat<T>::Zero(logits.rows(), logits.cols());
  for (std::size_t s = 0; s < batch.size(); ++s) {
    const Segment seg = cache.segments[s];
    for (Eigen::Index i = 0; i + 1 < seg.length; ++i) {
      const Eigen::Index r = seg.offset + i;
      const T mx = logits.row(r).maxCoeff();
      const Eigen::Array<T, 1, Eigen::Dynamic> ex = (logits.row(r).array() - mx).exp();
      const T sum = ex.sum();
      const int target = token_id(batch[s].tokens[static_cast<std::size_t>(i + 1)]);
      total += static_cast<double>(mx + std::log(sum) - logits(r, target));
      dlogits.row(r) = (ex / sum).matrix() * inv_count;
      dlogits(r, target) -= inv_count;
    }
  }
  const double mean = total / static_cast<double>(count);
  if (grad == nullptr) return mean;

  TransformerParams<T>& gp = *grad;
  gp.out_weight.noalias() += dlogits.transpose() * cache.final_x;
  gp.out_bias.row(0) += dlogits.colwise().sum();
  Mat<T> dx = dlogits * p.out_weight;

  const int dh = cfg.d / cfg.heads;
  const T scale = T(1) / std::sqrt(static_cast<T>(dh));
  for (std::size_t li = p.layers.size(); li-- > 0;) {
    const LayerParams<T>& l = p.layers[li];
    LayerParams<T>& gl = gp.layers[li];
    const LayerCache<T>& c = cache.layers[li];

    // feedforward sublayer
    Mat<T> df = dx;
    apply_mask(df, c.mask2);
    gl.w2.noalias() += df.transpose() * c.g;
    gl.b2.row(0) += df.colwise().sum();
    Mat<T> du = df * l.w2;
    du.array() *= Gelu<T>::derivative(c.u).array();
    gl.w1.noalias() += du.transpose() * c.b;
    gl.b1.row(0) += du.colwise().sum();
    const Mat<T> db = du * l.w1;
    dx += layer_norm_backward(db, l.ln2_gain, c.ln2, gl.ln2_gain, gl.ln2_bias);

    // attention sublayer
    Mat<T> dh_out = dx;
    apply_mask(dh_out, c.mask1);
    gl.wo.noalias() += dh_out.transpose() * c.o;
    const Mat<T> d_o = dh_out * l.wo;
    Mat<T> dq = Mat<T>::Zero(c.q.rows(), c.q.cols());
    Mat<T> dk = Mat<T>::Zero(c.k.rows(), c.k.cols());
    Mat<T> dv = Mat<T>::Zero(c.v.rows(), c.v.cols());
    std::size_t pi = 0;
    for (const Segment& seg : cache.segments) {
      for (int h = 0; h < cfg.heads; ++h) {
        const Mat<T>& prob = c.probs[pi++];
        const auto doh = d_o.block(seg.offset, h * dh, seg.length, dh);
        const auto qh = c.q.block(seg.offset, h * dh, seg.length, dh);
        const auto kh = c.k.block(seg.offset, h * dh, seg.length, dh);
        const auto vh = c.v.block(seg.offset, h * dh, seg.length, dh);
        const Mat<T> dprob = doh * vh.transpose();
        dv.block(seg.offset, h * dh, seg.length, dh).noalias() += prob.transpose() * doh;
        const Eigen::Matrix<T, Eigen::Dynamic, 1> rowdot =
            (dprob.array() * prob.array()).rowwise().sum();
        Mat<T> ds = prob.array() * (dprob.array().colwise() - rowdot.array());
        ds *= scale;
        dq.block(seg.offset, h * dh, seg.length, dh).noalias() += ds * kh;
        dk.block(seg.offset, h * dh, seg.length, dh).noalias() += ds.transpose() * qh;
      }
    }
    gl.wq.noalias() += dq.transpose() * c.a;
    gl.wk.noalias() += dk.transpose() * c.a;
    gl.wv.noalias() += dv.transpose() * c.a;
    Mat<T> da = dq * l.wq;
    da.noalias() += dk * l.wk;
    da.noalias() += dv * l.wv;
    dx += layer_norm_backward(da, l.ln1_gain, c.ln1, gl.ln1_gain, gl.ln1_bias);
  }

  for (std::size_t s = 0; s < batch.size(); ++s) {
    const Segment seg = cache.segments[s];
    Eigen::Matrix<T, Eigen::Dynamic, 1> e(cfg.d_task);
    for (int i = 0; i < cfg.d_task; ++i) e(i) = static_cast<T>(batch[s].task[static_cast<std::size_t>(i)]);
    const Mat<T> dcond = dx.middleRows(seg.offset, seg.length).colwise().sum();
    gp.task_bias += dcond;
    gp.task_weight.noalias() += dcond.transpose() * e.transpose();
    for (Eigen::Index i = 0; i < seg.length; ++i) {
      const int tok = token_id(batch[s].tokens[static_cast<std::size_t>(i)]);
      gp.token_embedding.row(tok) += dx.row(seg.offset + i);
      gp.position_embedding.row(i) += dx.row(seg.offset + i);
    }
  }
  return mean;
}

template <typename T>
std::vector<Mat<T>> attention_maps(const TransformerParams<T>& params, const SequenceInput& input) {
  ForwardCache<T> cache;
  packed_forward(params, std::span<const SequenceInput>(&input, 1), cache, nullptr);
  std::vector<Mat<T>> out;
  for (const LayerCache<T>& c : cache.layers) out.insert(out.end(), c.probs.begin(), c.probs.end());
  return out;
}

#define TRANSGP_INSTANTIATE(T)                                                                   \
  template struct TransformerParams<T>;                                                          \
  template class Decoder<T>;                                                                     \
  template Mat<T> forward<T>(const TransformerParams<T>&, const SequenceInput&);                 \
  template std::vector<double> next_token_logits<T>(const TransformerParams<T>&,                 \
                                                    std::span<const Token>,                      \
                                                    std::span<const double>);                    \
  template double sequence_loss<T>(const Mat<T>&, std::span<const Token>);                       \
  template double loss_and_gradient<T>(const TransformerParams<T>&,                              \
                                       std::span<const SequenceInput>, TransformerParams<T>*,    \
                                       Rng*);                                                    \
  template std::vector<Mat<T>> attention_maps<T>(const TransformerParams<T>&, const SequenceInput&);

TRANSGP_INSTANTIATE(float)
TRANSGP_INSTANTIATE(double)

#undef TRANSGP_INSTANTIATE

}  // namespace transgp
