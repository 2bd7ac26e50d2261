#include "gridhom/builtins.hpp"

#include <algorithm>

#include "json.hpp"

namespace gridhom {

namespace detail {
extern const char* const kBuiltinGridsJson;
}

const std::vector<BuiltinGrid>& builtin_grids() {
  static const std::vector<BuiltinGrid> table = [] {
    std::vector<BuiltinGrid> out;
    const auto j = nlohmann::json::parse(detail::kBuiltinGridsJson);
    for (const auto& g : j.at("grids")) {
      out.push_back({g.at("name").get<std::string>(), g.at("aliases").get<std::vector<std::string>>(),
                     g.at("description").get<std::string>(), grid_from_json(g)});
    }
    return out;
  }();
  return table;
}

const BuiltinGrid* find_builtin(std::string_view name) {
  for (const auto& b : builtin_grids()) {
    if (b.name == name || std::find(b.aliases.begin(), b.aliases.end(), name) != b.aliases.end()) return &b;
  }
  return nullptr;
}

const BuiltinGrid* identify_builtin(const GridDiagram& d) {
  const auto key = canonical_form(d);
  for (const auto& b : builtin_grids()) {
    if (b.diagram.size() == d.size() && canonical_form(b.diagram) == key) return &b;
  }
  return nullptr;
}

}  // namespace gridhom
