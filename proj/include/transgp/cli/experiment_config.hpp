#ifndef TRANSGP_CLI_EXPERIMENT_CONFIG_HPP_
#define TRANSGP_CLI_EXPERIMENT_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "transgp/gp/evolution.hpp"
#include "transgp/guided/sampling.hpp"
#include "transgp/neural/train.hpp"

namespace transgp {

enum class Method { kGP, kTGP, kTransGP, kPureTrans, kHandcrafted };

std::string_view method_name(Method m);
Method method_from_name(std::string_view name);

// Everything one experiment needs. Stored verbatim as each run's manifest, so
// a manifest is itself a valid config that replays that run.
struct ExperimentConfig {
  int scenario = 2;  // 1..3, or 0 when `tasks` was given explicitly
  std::vector<TaskSpec> tasks;
  Method method = Method::kGP;
  int runs = 1;
  int first_run = 0;  // runs first_run .. first_run + runs - 1
  std::uint64_t seed = 1;
  EvoConfig evo;
  GuidedConfig guided;
  std::filesystem::path sequencing_model;
  std::filesystem::path routing_model;
  TransformerConfig model;
  TrainConfig train;
  int collect_top_k = 20;
  int collect_last_gens = 20;
  int pure_trans_samples = 30;
  std::filesystem::path out = "out";

  // "scenario2" or "custom"
  std::string scenario_name() const;
  // Checks ranges and, for TransGP / PureTrans, that both model files exist.
  // Throws ConfigError.
  void validate() const;
};

// Unknown keys are rejected so that typos surface as config errors.
ExperimentConfig experiment_from_json(const nlohmann::json& j);
nlohmann::json experiment_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_experiment(const std::filesystem::path& path);

}  // namespace transgp

#endif  // TRANSGP_CLI_EXPERIMENT_CONFIG_HPP_
