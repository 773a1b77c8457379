#include "transgp/sim/task.hpp"

#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"

namespace transgp {

std::string_view objective_name(Objective objective) {
  switch (objective) {
    case Objective::kFmax:
      return "Fmax";
    case Objective::kFmean:
      return "Fmean";
    case Objective::kTmean:
      return "Tmean";
  }
  return "?";
}

Objective objective_from_name(std::string_view name) {
  if (name == "Fmax") return Objective::kFmax;
  if (name == "Fmean") return Objective::kFmean;
  if (name == "Tmean") return Objective::kTmean;
  throw ParseError("unknown objective '" + std::string(name) + "'");
}

std::string TaskSpec::id() const {
  return std::string(objective_name(objective)) + "-" + format_double(util_level) + "-" +
         std::to_string(mach_num);
}

TaskSpec TaskSpec::parse(std::string_view id) {
  std::string text = trim(id);
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    text = text.substr(1, text.size() - 2);
  }
  const auto parts = split(text, '-');
  if (parts.size() != 3) throw ParseError("task id must be <obj-util-machines>: " + text);
  TaskSpec task;
  task.objective = objective_from_name(parts[0]);
  task.util_level = parse_double(parts[1]);
  task.mach_num = static_cast<int>(parse_int(parts[2]));
  return task;
}

std::vector<TaskSpec> stock_scenario(int index) {
  if (index < 1 || index > 3) {
    throw InvalidConfig("stock scenarios are 1, 2 and 3; got " + std::to_string(index));
  }
  const Objective obj = index == 1 ? Objective::kFmax
                        : index == 2 ? Objective::kFmean
                                     : Objective::kTmean;
  return {TaskSpec{obj, 0.75, 6}, TaskSpec{obj, 0.85, 8}, TaskSpec{obj, 0.95, 10}};
}

}  // namespace transgp
