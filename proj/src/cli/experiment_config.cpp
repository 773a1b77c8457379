#include "transgp/cli/experiment_config.hpp"

#include <initializer_list>

#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"
#include "transgp/sim/scenario_io.hpp"

namespace transgp {

using nlohmann::json;

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kGP: return "GP";
    case Method::kTGP: return "TGP";
    case Method::kTransGP: return "TransGP";
    case Method::kPureTrans: return "PureTrans";
    case Method::kHandcrafted: return "handcrafted";
  }
  return "?";
}

Method method_from_name(std::string_view name) {
  for (Method m : {Method::kGP, Method::kTGP, Method::kTransGP, Method::kPureTrans,
                   Method::kHandcrafted}) {
    if (name == method_name(m)) return m;
  }
  throw ConfigError("unknown method '" + std::string(name) +
                    "' (expected GP, TGP, TransGP, PureTrans or handcrafted)");
}

std::string ExperimentConfig::scenario_name() const {
  return scenario > 0 ? "scenario" + std::to_string(scenario) : "custom";
}

void ExperimentConfig::validate() const {
  if (tasks.empty()) throw ConfigError("no tasks configured");
  if (runs < 1) throw ConfigError("runs must be at least 1");
  if (first_run < 0) throw ConfigError("first_run must be non-negative");
  evo.validate(static_cast<int>(tasks.size()));
  guided.validate();
  model.validate();
  train.validate();
  if (collect_top_k < 1 || collect_last_gens < 1) {
    throw ConfigError("collect.top_k and collect.last_gens must be positive");
  }
  if (pure_trans_samples < 1) throw ConfigError("pure_trans.samples must be positive");
  if (method == Method::kTransGP || method == Method::kPureTrans) {
    for (const auto& [kind, path] : {std::pair{"sequencing", &sequencing_model},
                                     std::pair{"routing", &routing_model}}) {
      if (path->empty()) {
        throw ConfigError(std::string(method_name(method)) + " needs a " + kind +
                          " model path (models." + kind + ")");
      }
      if (!std::filesystem::exists(*path)) {
        throw ConfigError(std::string(kind) + " model not found: " + path->string());
      }
    }
  }
}

namespace {

void check_keys(const json& j, const char* where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError(std::string(where) + " must be a JSON object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || item.key() == k;
    if (!known) throw ConfigError("unknown key '" + item.key() + "' in " + where);
  }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

ExperimentConfig experiment_from_json(const json& j) {
  ExperimentConfig cfg;
  try {
    check_keys(j, "experiment config",
               {"scenario", "tasks", "method", "runs", "first_run", "seed", "task_switch_prob",
                "temperature", "evolution", "shop", "guided", "models", "model", "train",
                "collect", "pure_trans", "out"});
    if (j.contains("tasks")) {
      cfg.scenario = 0;
      for (const json& t : j.at("tasks")) cfg.tasks.push_back(task_from_json(t));
      if (j.contains("scenario")) throw ConfigError("give either 'scenario' or 'tasks', not both");
    } else {
      read(j, "scenario", cfg.scenario);
      cfg.tasks = stock_scenario(cfg.scenario);
    }
    if (j.contains("method")) cfg.method = method_from_name(j.at("method").get<std::string>());
    read(j, "runs", cfg.runs);
    read(j, "first_run", cfg.first_run);
    read(j, "seed", cfg.seed);
    if (j.contains("task_switch_prob")) {
      cfg.evo.task_switch_prob = j.at("task_switch_prob").get<double>();
      cfg.guided.task_switch_prob = cfg.evo.task_switch_prob;
    }
    read(j, "temperature", cfg.guided.temperature);

    if (j.contains("evolution")) {
      const json& e = j.at("evolution");
      check_keys(e, "evolution",
                 {"pop_size", "generations", "tournament_size", "elites_per_task", "max_depth",
                  "init_min_depth", "init_max_depth", "mutation_max_depth", "test_seed_count",
                  "rotate_seeds", "archive_top_k", "threads"});
      read(e, "pop_size", cfg.evo.pop_size);
      read(e, "generations", cfg.evo.generations);
      read(e, "tournament_size", cfg.evo.tournament_size);
      read(e, "elites_per_task", cfg.evo.elites_per_task);
      read(e, "max_depth", cfg.evo.max_depth);
      read(e, "init_min_depth", cfg.evo.init_min_depth);
      read(e, "init_max_depth", cfg.evo.init_max_depth);
      read(e, "mutation_max_depth", cfg.evo.mutation_max_depth);
      read(e, "test_seed_count", cfg.evo.test_seed_count);
      read(e, "rotate_seeds", cfg.evo.rotate_seeds);
      read(e, "archive_top_k", cfg.evo.archive_top_k);
      read(e, "threads", cfg.evo.threads);
    }
    cfg.guided.max_depth = cfg.evo.max_depth;
    if (j.contains("shop")) {
      const json& s = j.at("shop");
      check_keys(s, "shop",
                 {"num_jobs", "ops_per_job", "workload", "speed", "transport", "due_date_factor"});
      cfg.evo.scenario = scenario_from_json(s);
    }
    if (j.contains("guided")) {
      const json& g = j.at("guided");
      check_keys(g, "guided", {"max_regen_tokens", "max_retries", "mix_ratio"});
      read(g, "max_regen_tokens", cfg.guided.max_regen_tokens);
      read(g, "max_retries", cfg.guided.max_retries);
      read(g, "mix_ratio", cfg.guided.mix_ratio);
    }
    if (j.contains("models")) {
      const json& m = j.at("models");
      check_keys(m, "models", {"sequencing", "routing"});
      if (m.contains("sequencing")) cfg.sequencing_model = m.at("sequencing").get<std::string>();
      if (m.contains("routing")) cfg.routing_model = m.at("routing").get<std::string>();
    }
    if (j.contains("model")) {
      const json& m = j.at("model");
      check_keys(m, "model", {"d", "heads", "layers", "dropout", "max_len", "ff"});
      read(m, "d", cfg.model.d);
      read(m, "heads", cfg.model.heads);
      read(m, "layers", cfg.model.layers);
      read(m, "dropout", cfg.model.dropout);
      read(m, "max_len", cfg.model.max_len);
      cfg.model.ff = 4 * cfg.model.d;
      read(m, "ff", cfg.model.ff);
    }
    if (j.contains("train")) {
      const json& t = j.at("train");
      check_keys(t, "train",
                 {"epochs", "batch_size", "learning_rate", "grad_clip", "init_stddev",
                  "check_gradients"});
      read(t, "epochs", cfg.train.epochs);
      read(t, "batch_size", cfg.train.batch_size);
      read(t, "learning_rate", cfg.train.learning_rate);
      read(t, "grad_clip", cfg.train.grad_clip);
      read(t, "init_stddev", cfg.train.init_stddev);
      read(t, "check_gradients", cfg.train.check_gradients);
    }
    if (j.contains("collect")) {
      const json& c = j.at("collect");
      check_keys(c, "collect", {"top_k", "last_gens"});
      read(c, "top_k", cfg.collect_top_k);
      read(c, "last_gens", cfg.collect_last_gens);
    }
    if (j.contains("pure_trans")) {
      const json& p = j.at("pure_trans");
      check_keys(p, "pure_trans", {"samples"});
      read(p, "samples", cfg.pure_trans_samples);
    }
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("experiment config: ") + e.what());
  } catch (const ParseError& e) {
    throw ConfigError(std::string("experiment config: ") + e.what());
  }
  return cfg;
}

json experiment_to_json(const ExperimentConfig& cfg) {
  json j;
  if (cfg.scenario > 0) {
    j["scenario"] = cfg.scenario;
  } else {
    j["tasks"] = json::array();
    for (const TaskSpec& t : cfg.tasks) j["tasks"].push_back(t.id());
  }
  j["method"] = std::string(method_name(cfg.method));
  j["runs"] = cfg.runs;
  j["first_run"] = cfg.first_run;
  j["seed"] = cfg.seed;
  j["task_switch_prob"] = cfg.evo.task_switch_prob;
  j["temperature"] = cfg.guided.temperature;
  const EvoConfig& e = cfg.evo;
  j["evolution"] = {{"pop_size", e.pop_size},
                    {"generations", e.generations},
                    {"tournament_size", e.tournament_size},
                    {"elites_per_task", e.elites_per_task},
                    {"max_depth", e.max_depth},
                    {"init_min_depth", e.init_min_depth},
                    {"init_max_depth", e.init_max_depth},
                    {"mutation_max_depth", e.mutation_max_depth},
                    {"test_seed_count", e.test_seed_count},
                    {"rotate_seeds", e.rotate_seeds},
                    {"archive_top_k", e.archive_top_k},
                    {"threads", e.threads}};
  json shop = scenario_to_json(e.scenario);
  shop.erase("task");
  shop.erase("seed");
  j["shop"] = shop;
  j["guided"] = {{"max_regen_tokens", cfg.guided.max_regen_tokens},
                 {"max_retries", cfg.guided.max_retries},
                 {"mix_ratio", cfg.guided.mix_ratio}};
  j["models"] = {{"sequencing", cfg.sequencing_model.string()},
                 {"routing", cfg.routing_model.string()}};
  j["model"] = {{"d", cfg.model.d},           {"heads", cfg.model.heads},
                {"layers", cfg.model.layers}, {"dropout", cfg.model.dropout},
                {"max_len", cfg.model.max_len}, {"ff", cfg.model.ff}};
  j["train"] = {{"epochs", cfg.train.epochs},
                {"batch_size", cfg.train.batch_size},
                {"learning_rate", cfg.train.learning_rate},
                {"grad_clip", cfg.train.grad_clip},
                {"init_stddev", cfg.train.init_stddev},
                {"check_gradients", cfg.train.check_gradients}};
  j["collect"] = {{"top_k", cfg.collect_top_k}, {"last_gens", cfg.collect_last_gens}};
  j["pure_trans"] = {{"samples", cfg.pure_trans_samples}};
  j["out"] = cfg.out.string();
  return j;
}

ExperimentConfig load_experiment(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return experiment_from_json(j);
}

}  // namespace transgp
