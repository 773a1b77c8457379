#ifndef TRANSGP_ANALYSIS_WILCOXON_HPP_
#define TRANSGP_ANALYSIS_WILCOXON_HPP_

#include <span>
#include <string>

namespace transgp {

struct RankSumResult {
  double u = 0.0;  // Mann-Whitney U of the first sample
  double p_value = 1.0;  // two-sided
  bool exact = false;
  // Every pooled value identical: no evidence either way, p = 1.
  bool degenerate = false;
};

// Rank-sum test with midranks for ties. Exact permutation distribution when
// |a| + |b| <= exact_limit, otherwise the normal approximation with tie and
// continuity corrections. Throws InvalidSize for an empty sample.
RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                int exact_limit = 12);

// Same, forcing one path.
RankSumResult wilcoxon_exact(std::span<const double> a, std::span<const double> b);
RankSumResult wilcoxon_normal(std::span<const double> a, std::span<const double> b);

// "↑" when the candidate is significantly better (lower mean) than the
// reference, "↓" when significantly worse, "=" otherwise.
std::string verdict(std::span<const double> candidate, std::span<const double> reference,
                    double alpha = 0.05);

}  // namespace transgp

#endif  // TRANSGP_ANALYSIS_WILCOXON_HPP_
