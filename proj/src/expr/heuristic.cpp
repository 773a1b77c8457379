#include "transgp/expr/heuristic.hpp"

#include <fstream>

#include "transgp/common/csv.hpp"
#include "transgp/common/error.hpp"

namespace transgp {

std::string_view rule_kind_name(RuleKind kind) {
  return kind == RuleKind::kSequencing ? "sequencing" : "routing";
}

RuleKind rule_kind_from_name(std::string_view name) {
  if (name == "sequencing") return RuleKind::kSequencing;
  if (name == "routing") return RuleKind::kRouting;
  throw ParseError("unknown rule kind '" + std::string(name) + "'");
}

nlohmann::json heuristic_to_json(const Heuristic& h) {
  nlohmann::json j;
  j["sequencing"] = to_token_ids(to_prefix_tokens(h.sequencing));
  j["routing"] = to_token_ids(to_prefix_tokens(h.routing));
  j["infix"] = {{"sequencing", infix_string(h.sequencing)},
                {"routing", infix_string(h.routing)}};
  return j;
}

Heuristic heuristic_from_json(const nlohmann::json& j) {
  auto read_rule = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
      throw ParseError(std::string("heuristic json lacks '") + key + "' array");
    }
    const auto ids = j[key].get<std::vector<int>>();
    return from_prefix_tokens(from_token_ids(ids));
  };
  return Heuristic{read_rule("sequencing"), read_rule("routing")};
}

void save_heuristic(const std::filesystem::path& path, const Heuristic& h,
                    const nlohmann::json& extra) {
  nlohmann::json j = heuristic_to_json(h);
  for (const auto& [key, value] : extra.items()) j[key] = value;
  write_file(path, j.dump(2) + "\n");
}

Heuristic load_heuristic(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return heuristic_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace transgp
