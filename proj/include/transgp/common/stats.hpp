#ifndef TRANSGP_COMMON_STATS_HPP_
#define TRANSGP_COMMON_STATS_HPP_

#include <vector>

namespace transgp {

struct SummaryStats {
  double min = 0.0;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 for a single value
  double max = 0.0;
};

// All zero for an empty input.
SummaryStats summarize(const std::vector<double>& values);

}  // namespace transgp

#endif  // TRANSGP_COMMON_STATS_HPP_
