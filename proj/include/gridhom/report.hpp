#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gridhom/generators.hpp"
#include "gridhom/grid.hpp"
#include "gridhom/module.hpp"
#include "gridhom/poly.hpp"
#include "json.hpp"

namespace gridhom {

std::string_view version() noexcept;

enum class Flavor { Tilde, Hat, Minus };
std::string to_string(Flavor f);
// Throws ValidationError for an unknown name.
Flavor parse_flavor(std::string_view name);

struct ComputeOptions {
  EnumerationOptions enumeration;  // tilde and hat
  MinusOptions minus;
};

struct KnotInvariants {
  int tau = 0;
  int genus = 0;
  LaurentPolynomial alexander;
  friend bool operator==(const KnotInvariants&, const KnotInvariants&) = default;
};

struct ComputationReport {
  std::string name;  // built-in name, or empty
  std::string hash;
  GridDiagram diagram{{0}, {0}};
  std::string flavor;  // "tilde", "hat", "minus" or "invariants"
  std::optional<BigradedRanks> ranks;
  std::optional<UModuleDecomposition> module;
  std::optional<KnotInvariants> invariants;
  std::optional<double> timing_ms;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

// {"version": ..., "report": ...}
nlohmann::json wrap_report(const nlohmann::json& report);

ComputationReport compute_report(const GridDiagram& d, Flavor flavor, const ComputeOptions& options = {});

// Minus decomposition, hat homology and both Alexander polynomial routes;
// throws ConsistencyError if the two routes disagree.
struct InvariantBundle {
  MinusResult minus;
  KnotInvariants invariants;
};
InvariantBundle compute_invariants(const GridDiagram& d, const ComputeOptions& options = {});
ComputationReport invariants_report(const GridDiagram& d, const ComputeOptions& options = {});

}  // namespace gridhom
