#ifndef TRANSGP_EXPR_HEURISTIC_HPP_
#define TRANSGP_EXPR_HEURISTIC_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "transgp/expr/expr_tree.hpp"

namespace transgp {

enum class RuleKind { kSequencing, kRouting };

std::string_view rule_kind_name(RuleKind kind);
RuleKind rule_kind_from_name(std::string_view name);

// A scheduling heuristic: one priority tree per decision type.
struct Heuristic {
  ExprTree sequencing;
  ExprTree routing;

  const ExprTree& rule(RuleKind kind) const {
    return kind == RuleKind::kSequencing ? sequencing : routing;
  }
  ExprTree& rule(RuleKind kind) { return kind == RuleKind::kSequencing ? sequencing : routing; }
  std::size_t size() const { return sequencing.size() + routing.size(); }

  bool operator==(const Heuristic&) const = default;
};

// {"sequencing": [ids], "routing": [ids], "infix": {"sequencing": ..., "routing": ...}}
// Token-id arrays include START and END.
nlohmann::json heuristic_to_json(const Heuristic& h);
// Reads the token arrays (infix is informative only). Throws ParseError or
// MalformedSequence.
Heuristic heuristic_from_json(const nlohmann::json& j);

void save_heuristic(const std::filesystem::path& path, const Heuristic& h,
                    const nlohmann::json& extra = nlohmann::json::object());
Heuristic load_heuristic(const std::filesystem::path& path);

}  // namespace transgp

#endif  // TRANSGP_EXPR_HEURISTIC_HPP_
