#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gridhom/grid.hpp"

namespace gridhom {

struct BuiltinGrid {
  std::string name;
  std::vector<std::string> aliases;
  std::string description;
  GridDiagram diagram;
};

// The shipped table, in file order.
const std::vector<BuiltinGrid>& builtin_grids();
// Lookup by name or alias.
const BuiltinGrid* find_builtin(std::string_view name);
// The built-in with the same canonical form, if any.
const BuiltinGrid* identify_builtin(const GridDiagram& d);

}  // namespace gridhom
