#include "transgp/analysis/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "transgp/common/error.hpp"

namespace transgp {

namespace {

struct Ranked {
  std::vector<double> ranks;  // pooled order: a first, then b
  double tie_term = 0.0;      // sum over tie groups of t^3 - t
  bool all_equal = false;
};

Ranked midranks(std::span<const double> a, std::span<const double> b) {
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::vector<std::size_t> order(pooled.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return pooled[x] < pooled[y]; });
  Ranked r;
  r.ranks.resize(pooled.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r.ranks[order[k]] = rank;
    const auto t = static_cast<double>(j - i + 1);
    r.tie_term += t * t * t - t;
    i = j + 1;
  }
  r.all_equal = !pooled.empty() && pooled.front() == pooled.back() &&
                std::all_of(pooled.begin(), pooled.end(), [&](double v) { return v == pooled.front(); });
  return r;
}

void check_sizes(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InvalidSize("rank-sum test needs two non-empty samples");
}

double u_statistic(const Ranked& r, std::size_t n) {
  double rank_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) rank_sum += r.ranks[i];
  return rank_sum - static_cast<double>(n * (n + 1)) / 2.0;
}

RankSumResult degenerate_result(double u) {
  RankSumResult res;
  res.u = u;
  res.p_value = 1.0;
  res.degenerate = true;
  return res;
}

// Visits every size-n subset of ranks and counts rank sums at least as far
// from the centre as the observed one.
void enumerate(const std::vector<double>& ranks, std::size_t start, std::size_t left, double sum,
               double centre, double observed_dev, long& extreme, long& total) {
  if (left == 0) {
    ++total;
    if (std::abs(sum - centre) >= observed_dev - 1e-9) ++extreme;
    return;
  }
  for (std::size_t i = start; i + left <= ranks.size(); ++i) {
    enumerate(ranks, i + 1, left - 1, sum + ranks[i], centre, observed_dev, extreme, total);
  }
}

}  // namespace

RankSumResult wilcoxon_exact(std::span<const double> a, std::span<const double> b) {
  check_sizes(a, b);
  const Ranked r = midranks(a, b);
  const std::size_t n = a.size();
  const double u = u_statistic(r, n);
  if (r.all_equal) return degenerate_result(u);
  const double m = static_cast<double>(b.size());
  const double offset = static_cast<double>(n * (n + 1)) / 2.0;
  const double centre = static_cast<double>(n) * m / 2.0 + offset;
  long extreme = 0;
  long total = 0;
  enumerate(r.ranks, 0, n, 0.0, centre, std::abs(u + offset - centre), extreme, total);
  RankSumResult res;
  res.u = u;
  res.p_value = std::min(1.0, static_cast<double>(extreme) / static_cast<double>(total));
  res.exact = true;
  return res;
}

RankSumResult wilcoxon_normal(std::span<const double> a, std::span<const double> b) {
  check_sizes(a, b);
  const Ranked r = midranks(a, b);
  const double n = static_cast<double>(a.size());
  const double m = static_cast<double>(b.size());
  const double u = u_statistic(r, a.size());
  if (r.all_equal) return degenerate_result(u);
  const double total = n + m;
  const double var = n * m / 12.0 * ((total + 1.0) - r.tie_term / (total * (total - 1.0)));
  const double dev = std::max(0.0, std::abs(u - n * m / 2.0) - 0.5);
  RankSumResult res;
  res.u = u;
  res.p_value = std::min(1.0, std::erfc(dev / std::sqrt(var) / std::sqrt(2.0)));
  return res;
}

RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                int exact_limit) {
  if (static_cast<int>(a.size() + b.size()) <= exact_limit) return wilcoxon_exact(a, b);
  return wilcoxon_normal(a, b);
}

std::string verdict(std::span<const double> candidate, std::span<const double> reference,
                    double alpha) {
  const RankSumResult res = wilcoxon_rank_sum(candidate, reference);
  if (res.p_value >= alpha) return "=";
  const double mc = std::accumulate(candidate.begin(), candidate.end(), 0.0) /
                    static_cast<double>(candidate.size());
  const double mr = std::accumulate(reference.begin(), reference.end(), 0.0) /
                    static_cast<double>(reference.size());
  if (mc < mr) return "↑";
  if (mc > mr) return "↓";
  return "=";
}

}  // namespace transgp
