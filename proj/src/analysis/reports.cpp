#include "transgp/analysis/reports.hpp"

#include "transgp/analysis/similarity.hpp"
#include "transgp/analysis/wilcoxon.hpp"
#include "transgp/common/csv.hpp"
#include "transgp/common/stats.hpp"

namespace transgp {

namespace {

constexpr RuleKind kKinds[] = {RuleKind::kSequencing, RuleKind::kRouting};

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

}  // namespace

std::string size_report(const std::vector<MethodHeuristics>& methods) {
  CsvWriter csv({"method", "task_id", "mean", "std"});
  for (const MethodHeuristics& m : methods) {
    for (std::size_t t = 0; t < m.tasks.size(); ++t) {
      std::vector<double> sizes;
      for (const auto& run : m.runs) sizes.push_back(static_cast<double>(run.at(t).size()));
      const SummaryStats s = summarize(sizes);
      csv.add_row({m.method, m.tasks[t].id(), format_fixed(s.mean, 2), format_fixed(s.std, 2)});
    }
  }
  return csv.str();
}

std::string usage_report(const std::vector<MethodHeuristics>& methods) {
  std::vector<std::string> header{"method", "task_id", "rule_kind"};
  for (Token t : kFunctions) header.emplace_back(token_name(t));
  for (Token t : kTerminals) header.emplace_back(token_name(t));
  CsvWriter csv(header);
  for (const MethodHeuristics& m : methods) {
    for (std::size_t t = 0; t < m.tasks.size(); ++t) {
      for (RuleKind kind : kKinds) {
        std::map<Token, int> total;
        for (const auto& run : m.runs) {
          for (const auto& [tok, n] : usage_counts(run.at(t).rule(kind))) total[tok] += n;
        }
        std::vector<std::string> row{m.method, m.tasks[t].id(), std::string(rule_kind_name(kind))};
        for (Token tok : kFunctions) row.push_back(std::to_string(total[tok]));
        for (Token tok : kTerminals) row.push_back(std::to_string(total[tok]));
        csv.add_row(row);
      }
    }
  }
  return csv.str();
}

std::string similarity_report(const std::vector<MethodHeuristics>& methods) {
  CsvWriter csv({"method", "pair", "rule_kind", "jaccard", "size_similarity"});
  for (const MethodHeuristics& m : methods) {
    for (std::size_t i = 0; i < m.tasks.size(); ++i) {
      for (std::size_t j = i + 1; j < m.tasks.size(); ++j) {
        for (RuleKind kind : kKinds) {
          std::vector<double> jac;
          std::vector<double> size;
          for (const auto& run : m.runs) {
            const ExprTree& a = run.at(i).rule(kind);
            const ExprTree& b = run.at(j).rule(kind);
            jac.push_back(jaccard(terminal_set(a), terminal_set(b)));
            size.push_back(size_similarity(static_cast<int>(a.size()), static_cast<int>(b.size())));
          }
          csv.add_row({m.method, m.tasks[i].id() + " vs " + m.tasks[j].id(),
                       std::string(rule_kind_name(kind)), format_fixed(mean_of(jac), 4),
                       format_fixed(mean_of(size), 4)});
        }
      }
    }
  }
  return csv.str();
}

std::string pattern_report(const PatternTable& table) {
  CsvWriter csv({"rank", "pattern", "key", "frequency", "coverage"});
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const PatternRow& r = table.rows[i];
    // Labels contain commas, so they are quoted.
    csv.add_row({std::to_string(i + 1), "\"" + pattern_label(r.pattern) + "\"",
                 canonical_key(r.pattern), std::to_string(r.frequency), format_fixed(r.coverage, 2)});
  }
  return csv.str();
}

SignificanceRow compare_samples(const std::string& pair, const std::string& task_id,
                                const std::vector<double>& candidate,
                                const std::vector<double>& reference) {
  SignificanceRow row;
  row.pair = pair;
  row.task_id = task_id;
  row.candidate_mean = mean_of(candidate);
  row.reference_mean = mean_of(reference);
  const RankSumResult res = wilcoxon_rank_sum(candidate, reference);
  row.statistic = res.u;
  row.p_value = res.p_value;
  row.verdict = verdict(candidate, reference);
  return row;
}

std::string significance_report(const std::vector<SignificanceRow>& rows) {
  CsvWriter csv({"pair", "task_id", "candidate_mean", "reference_mean", "statistic", "p_value",
                 "verdict"});
  for (const SignificanceRow& r : rows) {
    csv.add_row({r.pair, r.task_id, format_fixed(r.candidate_mean, 2),
                 format_fixed(r.reference_mean, 2), format_double(r.statistic),
                 format_fixed(r.p_value, 4), r.verdict});
  }
  return csv.str();
}

}  // namespace transgp
