#ifndef TRANSGP_SIM_POLICY_HPP_
#define TRANSGP_SIM_POLICY_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "transgp/expr/features.hpp"
#include "transgp/expr/heuristic.hpp"

namespace transgp {

// Everything a decision rule may look at for one (operation, machine) pair.
// due_date and ready_time are only consumed by the handcrafted rules.
struct DecisionPoint {
  FeatureVector features;
  double due_date = 0.0;
  double ready_time = 0.0;
  int job = 0;
  int op = 0;
  int machine = 0;
};

// Lower priority wins for both decisions.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual double sequencing_priority(const DecisionPoint& p) const = 0;
  virtual double routing_priority(const DecisionPoint& p) const = 0;
};

class HeuristicPolicy final : public Policy {
 public:
  explicit HeuristicPolicy(const Heuristic& h) : h_(h) {}
  double sequencing_priority(const DecisionPoint& p) const override;
  double routing_priority(const DecisionPoint& p) const override;

 private:
  const Heuristic& h_;
};

enum class SequencingRule { kSPT, kLPT, kEDD, kFIFO };
enum class RoutingRule { kNIQ, kWIQ };

std::string_view sequencing_rule_name(SequencingRule r);
std::string_view routing_rule_name(RoutingRule r);

// Selector-style classic rules: one attribute plus a min/max flag.
class HandcraftedPolicy final : public Policy {
 public:
  HandcraftedPolicy(SequencingRule seq, RoutingRule route) : seq_(seq), route_(route) {}
  double sequencing_priority(const DecisionPoint& p) const override;
  double routing_priority(const DecisionPoint& p) const override;

  std::string name() const;  // "SPT+NIQ"

 private:
  SequencingRule seq_;
  RoutingRule route_;
};

// The 4 x 2 grid in table order: SPT, LPT, EDD, FIFO with NIQ, then with WIQ.
std::vector<HandcraftedPolicy> handcrafted_grid();

// Index of the smallest value; ties go to the lowest index.
std::size_t select_min(const std::vector<double>& priorities);

}  // namespace transgp

#endif  // TRANSGP_SIM_POLICY_HPP_
