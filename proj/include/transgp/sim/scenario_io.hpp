#ifndef TRANSGP_SIM_SCENARIO_IO_HPP_
#define TRANSGP_SIM_SCENARIO_IO_HPP_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "transgp/sim/instance.hpp"
#include "transgp/sim/simulator.hpp"

namespace transgp {

// Scenario config as JSON, e.g.
//   {"num_jobs": 124, "ops_per_job": [2, 10], "workload": [100, 1000],
//    "speed": [10, 15], "transport": [7, 100], "due_date_factor": 1.5,
//    "seed": 7, "task": {"objective": "Fmean", "util_level": 0.85, "mach_num": 8}}
// Missing keys keep their defaults.
nlohmann::json scenario_to_json(const ScenarioConfig& cfg);
ScenarioConfig scenario_from_json(const nlohmann::json& j);
ScenarioConfig load_scenario(const std::filesystem::path& path);

nlohmann::json task_to_json(const TaskSpec& task);
TaskSpec task_from_json(const nlohmann::json& j);

// job_id,release,due,completion,flowtime,tardiness, one row per job, then a
// "summary" row whose completion/flowtime/tardiness columns hold the max
// completion, mean flowtime and mean tardiness.
std::string sim_result_csv(const SimResult& result);

}  // namespace transgp

#endif  // TRANSGP_SIM_SCENARIO_IO_HPP_
