#include "transgp/sim/policy.hpp"

#include <string>

namespace transgp {

double HeuristicPolicy::sequencing_priority(const DecisionPoint& p) const {
  return evaluate(h_.sequencing, p.features);
}

double HeuristicPolicy::routing_priority(const DecisionPoint& p) const {
  return evaluate(h_.routing, p.features);
}

std::string_view sequencing_rule_name(SequencingRule r) {
  switch (r) {
    case SequencingRule::kSPT:
      return "SPT";
    case SequencingRule::kLPT:
      return "LPT";
    case SequencingRule::kEDD:
      return "EDD";
    case SequencingRule::kFIFO:
      return "FIFO";
  }
  return "?";
}

std::string_view routing_rule_name(RoutingRule r) {
  return r == RoutingRule::kNIQ ? "NIQ" : "WIQ";
}

double HandcraftedPolicy::sequencing_priority(const DecisionPoint& p) const {
  switch (seq_) {
    case SequencingRule::kSPT:
      return p.features[Token::kPT];
    case SequencingRule::kLPT:
      return -p.features[Token::kPT];  // max flag
    case SequencingRule::kEDD:
      return p.due_date;
    case SequencingRule::kFIFO:
      return p.ready_time;
  }
  return 0.0;
}

double HandcraftedPolicy::routing_priority(const DecisionPoint& p) const {
  return route_ == RoutingRule::kNIQ ? p.features[Token::kNIQ] : p.features[Token::kWIQ];
}

std::string HandcraftedPolicy::name() const {
  return std::string(sequencing_rule_name(seq_)) + "+" + std::string(routing_rule_name(route_));
}

std::vector<HandcraftedPolicy> handcrafted_grid() {
  std::vector<HandcraftedPolicy> grid;
  for (RoutingRule r : {RoutingRule::kNIQ, RoutingRule::kWIQ}) {
    for (SequencingRule s : {SequencingRule::kSPT, SequencingRule::kLPT, SequencingRule::kEDD,
                             SequencingRule::kFIFO}) {
      grid.emplace_back(s, r);
    }
  }
  return grid;
}

std::size_t select_min(const std::vector<double>& priorities) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < priorities.size(); ++i) {
    if (priorities[i] < priorities[best]) best = i;
  }
  return best;
}

}  // namespace transgp
