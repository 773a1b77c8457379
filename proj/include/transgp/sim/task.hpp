#ifndef TRANSGP_SIM_TASK_HPP_
#define TRANSGP_SIM_TASK_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace transgp {

enum class Objective { kFmax, kFmean, kTmean };

std::string_view objective_name(Objective objective);
Objective objective_from_name(std::string_view name);

// One scheduling task: what to minimise on which shop.
struct TaskSpec {
  Objective objective = Objective::kFmean;
  double util_level = 0.85;
  int mach_num = 10;

  // "Fmean-0.85-8"
  std::string id() const;
  // Accepts "Fmean-0.85-8" with or without surrounding angle brackets.
  static TaskSpec parse(std::string_view id);

  bool operator==(const TaskSpec&) const = default;
};

// Stock scenarios 1..3: one objective, three (util, machines) settings.
std::vector<TaskSpec> stock_scenario(int index);

}  // namespace transgp

#endif  // TRANSGP_SIM_TASK_HPP_
