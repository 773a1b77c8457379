#ifndef TRANSGP_EXPR_FEATURES_HPP_
#define TRANSGP_EXPR_FEATURES_HPP_

#include <array>

#include "transgp/expr/token.hpp"

namespace transgp {

// One value per terminal, indexed by terminal token. Time-valued features are
// in simulator time units; NIQ and NOR are counts.
struct FeatureVector {
  std::array<double, kNumTerminals> values{};

  double& operator[](Token t) { return values[static_cast<std::size_t>(terminal_index(t))]; }
  double operator[](Token t) const {
    return values[static_cast<std::size_t>(terminal_index(t))];
  }
};

}  // namespace transgp

#endif  // TRANSGP_EXPR_FEATURES_HPP_
