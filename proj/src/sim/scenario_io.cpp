#include "transgp/sim/scenario_io.hpp"

#include <algorithm>
#include <iterator>

#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"

namespace transgp {

nlohmann::json task_to_json(const TaskSpec& task) {
  return {{"objective", std::string(objective_name(task.objective))},
          {"util_level", task.util_level},
          {"mach_num", task.mach_num}};
}

TaskSpec task_from_json(const nlohmann::json& j) {
  if (j.is_string()) return TaskSpec::parse(j.get<std::string>());
  TaskSpec task;
  if (j.contains("objective")) task.objective = objective_from_name(j["objective"].get<std::string>());
  if (j.contains("util_level")) task.util_level = j["util_level"].get<double>();
  if (j.contains("mach_num")) task.mach_num = j["mach_num"].get<int>();
  return task;
}

nlohmann::json scenario_to_json(const ScenarioConfig& cfg) {
  return {{"task", task_to_json(cfg.task)},
          {"num_jobs", cfg.num_jobs},
          {"ops_per_job", {cfg.ops_per_job.lo, cfg.ops_per_job.hi}},
          {"workload", {cfg.workload.lo, cfg.workload.hi}},
          {"speed", {cfg.speed.lo, cfg.speed.hi}},
          {"transport", {cfg.transport.lo, cfg.transport.hi}},
          {"due_date_factor", cfg.due_date_factor},
          {"seed", cfg.seed}};
}

namespace {

template <typename Range, typename T>
void read_range(const nlohmann::json& j, const char* key, Range& out) {
  if (!j.contains(key)) return;
  const auto& v = j[key];
  if (!v.is_array() || v.size() != 2) {
    throw ConfigError(std::string("'") + key + "' must be a two-element array");
  }
  out.lo = v[0].get<T>();
  out.hi = v[1].get<T>();
}

}  // namespace

ScenarioConfig scenario_from_json(const nlohmann::json& j) {
  ScenarioConfig cfg;
  if (!j.is_object()) throw ConfigError("scenario config must be a JSON object");
  for (const auto& item : j.items()) {
    static const char* const kKeys[] = {"task",      "num_jobs",  "ops_per_job",     "workload",
                                        "speed",     "transport", "due_date_factor", "seed"};
    if (std::find(std::begin(kKeys), std::end(kKeys), item.key()) == std::end(kKeys)) {
      throw ConfigError("unknown key '" + item.key() + "' in scenario config");
    }
  }
  try {
    if (j.contains("task")) cfg.task = task_from_json(j["task"]);
    if (j.contains("num_jobs")) cfg.num_jobs = j["num_jobs"].get<int>();
    read_range<IntRange, int>(j, "ops_per_job", cfg.ops_per_job);
    read_range<RealRange, double>(j, "workload", cfg.workload);
    read_range<RealRange, double>(j, "speed", cfg.speed);
    read_range<IntRange, int>(j, "transport", cfg.transport);
    if (j.contains("due_date_factor")) cfg.due_date_factor = j["due_date_factor"].get<double>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("scenario config: ") + e.what());
  } catch (const ParseError& e) {
    throw ConfigError(std::string("scenario config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return scenario_from_json(j);
}

std::string sim_result_csv(const SimResult& result) {
  CsvWriter csv({"job_id", "release", "due", "completion", "flowtime", "tardiness"});
  double max_completion = 0.0;
  double sum_flow = 0.0;
  double sum_tardy = 0.0;
  for (std::size_t i = 0; i < result.jobs.size(); ++i) {
    const JobOutcome& j = result.jobs[i];
    const double flow = j.completion - j.release;
    const double tardy = std::max(0.0, j.completion - j.due_date);
    max_completion = std::max(max_completion, j.completion);
    sum_flow += flow;
    sum_tardy += tardy;
    csv.add_row({std::to_string(i), format_double(j.release), format_double(j.due_date),
                 format_double(j.completion), format_double(flow), format_double(tardy)});
  }
  const double n = result.jobs.empty() ? 1.0 : static_cast<double>(result.jobs.size());
  csv.add_row({"summary", "", "", format_double(max_completion), format_double(sum_flow / n),
               format_double(sum_tardy / n)});
  return csv.str();
}

}  // namespace transgp
