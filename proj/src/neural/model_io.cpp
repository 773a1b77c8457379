#include "transgp/neural/model_io.hpp"

#include <bit>
#include <cstring>

#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"

namespace transgp {

namespace {

constexpr char kMagic[4] = {'T', 'G', 'P', 'M'};
constexpr std::uint32_t kVersion = 1;

template <typename U>
void put(std::string& out, U value) {
  static_assert(std::endian::native == std::endian::little, "model files assume little-endian hosts");
  char bytes[sizeof(U)];
  std::memcpy(bytes, &value, sizeof(U));
  out.append(bytes, sizeof(U));
}

class Reader {
 public:
  explicit Reader(const std::string& data) : data_(data) {}

  template <typename U>
  U get() {
    if (pos_ + sizeof(U) > data_.size()) throw ShapeMismatch("model file is truncated");
    U value;
    std::memcpy(&value, data_.data() + pos_, sizeof(U));
    pos_ += sizeof(U);
    return value;
  }
  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  const std::string& data_;
  std::size_t pos_ = 0;
};

}  // namespace

void save_params(const TransformerParams<float>& params, const std::filesystem::path& path) {
  std::string out(kMagic, sizeof(kMagic));
  put(out, kVersion);
  const TransformerConfig& c = params.config;
  for (int v : {c.d, c.heads, c.layers, c.vocab, c.max_len, c.d_task, c.ff}) put<std::int32_t>(out, v);
  put(out, c.dropout);
  for (const Mat<float>* m : params.tensors()) {
    for (Eigen::Index i = 0; i < m->size(); ++i) put(out, m->data()[i]);
  }
  write_file(path, out);
}

TransformerParams<float> load_params(const std::filesystem::path& path) {
  const std::string data = read_file(path);
  if (data.size() < sizeof(kMagic) || std::memcmp(data.data(), kMagic, sizeof(kMagic)) != 0) {
    throw FormatVersionMismatch(path.string() + ": not a model file");
  }
  Reader in(data);
  for (std::size_t i = 0; i < sizeof(kMagic); ++i) in.get<char>();
  const auto version = in.get<std::uint32_t>();
  if (version != kVersion) {
    throw FormatVersionMismatch(path.string() + ": unsupported model version " +
                                std::to_string(version));
  }
  TransformerConfig c;
  c.d = in.get<std::int32_t>();
  c.heads = in.get<std::int32_t>();
  c.layers = in.get<std::int32_t>();
  c.vocab = in.get<std::int32_t>();
  c.max_len = in.get<std::int32_t>();
  c.d_task = in.get<std::int32_t>();
  c.ff = in.get<std::int32_t>();
  c.dropout = in.get<double>();
  TransformerParams<float> params;
  try {
    params = TransformerParams<float>::zeros(c);
  } catch (const ConfigError& e) {
    throw ShapeMismatch(path.string() + ": bad config block: " + e.what());
  }
  std::size_t expected = params.parameter_count() * sizeof(float);
  if (in.remaining() != expected) {
    throw ShapeMismatch(path.string() + ": payload holds " + std::to_string(in.remaining()) +
                        " bytes, config needs " + std::to_string(expected));
  }
  for (Mat<float>* m : params.tensors()) {
    for (Eigen::Index i = 0; i < m->size(); ++i) m->data()[i] = in.get<float>();
  }
  return params;
}

}  // namespace transgp
