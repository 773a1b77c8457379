#ifndef TRANSGP_ANALYSIS_REPORTS_HPP_
#define TRANSGP_ANALYSIS_REPORTS_HPP_

#include <string>
#include <vector>

#include "transgp/analysis/patterns.hpp"
#include "transgp/expr/heuristic.hpp"
#include "transgp/sim/task.hpp"

namespace transgp {

// Final heuristics of one method: runs[r][t] is run r's best for task t.
struct MethodHeuristics {
  std::string method;
  std::vector<TaskSpec> tasks;
  std::vector<std::vector<Heuristic>> runs;
};

// method,task_id,mean,std of heuristic size (both rules) across runs.
std::string size_report(const std::vector<MethodHeuristics>& methods);

// method,task_id,rule_kind, then one count column per function and terminal,
// summed over runs.
std::string usage_report(const std::vector<MethodHeuristics>& methods);

// method,pair,rule_kind,jaccard,size_similarity averaged over runs; one row
// per task pair per rule kind.
std::string similarity_report(const std::vector<MethodHeuristics>& methods);

// rank,pattern,key,frequency,coverage
std::string pattern_report(const PatternTable& table);

struct SignificanceRow {
  std::string pair;  // "TransGP vs GP"
  std::string task_id;
  double candidate_mean = 0.0;
  double reference_mean = 0.0;
  double statistic = 0.0;
  double p_value = 1.0;
  std::string verdict;
};

SignificanceRow compare_samples(const std::string& pair, const std::string& task_id,
                                const std::vector<double>& candidate,
                                const std::vector<double>& reference);

// pair,task_id,candidate_mean,reference_mean,statistic,p_value,verdict
std::string significance_report(const std::vector<SignificanceRow>& rows);

}  // namespace transgp

#endif  // TRANSGP_ANALYSIS_REPORTS_HPP_
