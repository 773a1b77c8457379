#ifndef TRANSGP_NEURAL_MODEL_IO_HPP_
#define TRANSGP_NEURAL_MODEL_IO_HPP_

#include <filesystem>

#include "transgp/neural/transformer.hpp"

namespace transgp {

// Binary layout, little-endian throughout:
//   "TGPM", u32 version (1),
//   i32 d, heads, layers, vocab, max_len, d_task, ff, f64 dropout,
//   every tensor in TransformerParams order as column-major f32.
void save_params(const TransformerParams<float>& params, const std::filesystem::path& path);

// Throws IoError (unreadable), FormatVersionMismatch (magic or version),
// ShapeMismatch (bad config block, truncated or oversized payload).
TransformerParams<float> load_params(const std::filesystem::path& path);

}  // namespace transgp

#endif  // TRANSGP_NEURAL_MODEL_IO_HPP_
