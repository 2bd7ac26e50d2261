#include "gridhom/errors.hpp"

namespace gridhom {

int exit_code(const Error& e) noexcept {
  if (dynamic_cast<const CapExceeded*>(&e)) return 2;
  if (dynamic_cast<const ConsistencyError*>(&e)) return 3;
  return 1;
}

}  // namespace gridhom
