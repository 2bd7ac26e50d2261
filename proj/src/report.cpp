#include "gridhom/report.hpp"

#include <sstream>

#include "gridhom/builtins.hpp"
#include "gridhom/errors.hpp"
#include "gridhom/homology.hpp"
#include "gridhom/invariants.hpp"

#ifndef GRIDHOM_VERSION
#define GRIDHOM_VERSION "0.0.0"
#endif

namespace gridhom {

std::string_view version() noexcept { return GRIDHOM_VERSION; }

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::Tilde: return "tilde";
    case Flavor::Hat: return "hat";
    case Flavor::Minus: return "minus";
  }
  return "?";
}

Flavor parse_flavor(std::string_view name) {
  if (name == "tilde") return Flavor::Tilde;
  if (name == "hat") return Flavor::Hat;
  if (name == "minus") return Flavor::Minus;
  throw ValidationError("unknown flavor '" + std::string(name) + "' (expected tilde, hat or minus)");
}

nlohmann::json ComputationReport::to_json() const {
  nlohmann::json j;
  j["diagram"] = grid_to_json(diagram);
  j["diagram"]["name"] = name.empty() ? nlohmann::json(nullptr) : nlohmann::json(name);
  j["diagram"]["hash"] = hash;
  j["flavor"] = flavor;
  if (ranks) {
    j["ranks"] = ranks->to_json();
    j["total_rank"] = ranks->total();
    j["poincare"] = ranks->to_string();
  }
  if (module) j["module"] = module->to_json();
  if (invariants) {
    j["invariants"] = {{"tau", invariants->tau},
                       {"genus", invariants->genus},
                       {"alexander", invariants->alexander.to_json()},
                       {"alexander_text", invariants->alexander.to_string()}};
  }
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j;
}

std::string ComputationReport::to_text() const {
  std::ostringstream out;
  out << "diagram: " << (name.empty() ? "(unnamed)" : name) << "  n=" << diagram.size() << "  hash=" << hash << "\n";
  out << "flavor: " << flavor << "\n";
  if (ranks) {
    out << "poincare: " << ranks->to_string() << "\n";
    out << "total rank: " << ranks->total() << "\n";
  }
  if (module) {
    out << "tower: F[U] at (M=" << module->tower.maslov << ", A=" << module->tower.alexander << ")\n";
    if (module->torsion.empty()) out << "torsion: none\n";
    for (const auto& b : module->torsion) {
      out << "torsion: F[U]/U^" << b.length << " at (M=" << b.maslov << ", A=" << b.alexander << ")\n";
    }
  }
  if (invariants) {
    out << "tau: " << invariants->tau << "\n";
    out << "genus: " << invariants->genus << "\n";
    out << "alexander: " << invariants->alexander.to_string() << "\n";
  }
  if (timing_ms) out << "time: " << *timing_ms << " ms\n";
  return out.str();
}

nlohmann::json wrap_report(const nlohmann::json& report) {
  return {{"version", std::string(version())}, {"report", report}};
}

namespace {

ComputationReport skeleton(const GridDiagram& d, std::string flavor) {
  ComputationReport r;
  r.diagram = d;
  r.hash = canonical_hash(d);
  if (const auto* b = identify_builtin(d)) r.name = b->name;
  r.flavor = std::move(flavor);
  return r;
}

BigradedRanks tilde_ranks(const GridDiagram& d, const EnumerationOptions& options) {
  const SparseBoundary b = build_tilde(d, options);
  if (!verify_d_squared(b)) throw ConsistencyError("tilde differential does not square to zero");
  return homology_ranks(b);
}

}  // namespace

ComputationReport compute_report(const GridDiagram& d, Flavor flavor, const ComputeOptions& options) {
  ComputationReport r = skeleton(d, to_string(flavor));
  switch (flavor) {
    case Flavor::Tilde:
      r.ranks = tilde_ranks(d, options.enumeration);
      break;
    case Flavor::Hat:
      r.ranks = hat_from_tilde(tilde_ranks(d, options.enumeration), d.size());
      break;
    case Flavor::Minus: {
      auto m = compute_minus(d, options.minus);
      r.module = m.module;
      break;
    }
  }
  return r;
}

InvariantBundle compute_invariants(const GridDiagram& d, const ComputeOptions& options) {
  InvariantBundle out{compute_minus(d, options.minus), {}};
  out.invariants.tau = tau(out.minus.module);
  out.invariants.genus = genus(out.minus.hat);
  out.invariants.alexander = alexander_from_homology(out.minus.hat);
  const auto oracle = alexander_from_generators(d, EnumerationOptions{options.minus.max_n});
  if (oracle != out.invariants.alexander) {
    throw ConsistencyError("Alexander polynomial from homology (" + out.invariants.alexander.to_string() +
                           ") differs from the generator oracle (" + oracle.to_string() + ")");
  }
  return out;
}

ComputationReport invariants_report(const GridDiagram& d, const ComputeOptions& options) {
  ComputationReport r = skeleton(d, "invariants");
  const auto bundle = compute_invariants(d, options);
  r.ranks = bundle.minus.hat;
  r.module = bundle.minus.module;
  r.invariants = bundle.invariants;
  return r;
}

}  // namespace gridhom
