// Command-line front end. Exit codes: 0 success, 1 input or move error,
// 2 size cap exceeded, 3 internal consistency failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gridhom/acceptance.hpp"
#include "gridhom/builtins.hpp"
#include "gridhom/errors.hpp"
#include "gridhom/fuzz.hpp"
#include "gridhom/generators.hpp"
#include "gridhom/grid.hpp"
#include "gridhom/moves.hpp"
#include "gridhom/report.hpp"
#include "json.hpp"

namespace {

using namespace gridhom;

// A path, "-" for stdin, or the name of a built-in diagram.
GridDiagram load_grid(const std::string& source) {
  if (source == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_grid(text);
  }
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    if (!in) throw ParseError("cannot read " + source);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_grid(text);
  }
  if (const auto* b = find_builtin(source)) return b->diagram;
  throw ParseError("no such file or built-in diagram: " + source);
}

void print_json(const nlohmann::json& report) { std::cout << wrap_report(report).dump(2) << "\n"; }

struct CommonFlags {
  bool json = false;
  bool timing = false;
  int max_n = 9;
  int minus_max_n = 7;
  int stability_window = 3;
  int slice_budget = 64;
  int u_variable = 0;
  std::string route = "collapsed";

  void attach(CLI::App* app, bool minus) {
    app->add_flag("--json", json, "JSON output");
    app->add_flag("--timing", timing, "include wall-clock time in the report");
    app->add_option("--max-n", max_n, "enumeration cap for tilde and hat")->capture_default_str();
    if (!minus) return;
    app->add_option("--minus-max-n", minus_max_n, "enumeration cap for the minus flavor")->capture_default_str();
    app->add_option("--stability-window", stability_window, "consecutive U isomorphisms required")
        ->capture_default_str();
    app->add_option("--slice-budget", slice_budget, "maximum number of Alexander slices")->capture_default_str();
    app->add_option("--route", route, "minus complex: collapsed or full")
        ->check(CLI::IsMember({"collapsed", "full"}))
        ->capture_default_str();
    app->add_option("--u-variable", u_variable, "O marker whose variable acts as U (full route)")
        ->capture_default_str();
  }

  ComputeOptions options() const {
    ComputeOptions o;
    o.enumeration.max_n = max_n;
    o.minus.max_n = minus_max_n;
    o.minus.stability_window = stability_window;
    o.minus.slice_budget = slice_budget;
    o.minus.u_variable = u_variable;
    o.minus.route = route == "full" ? MinusRoute::FullVariables : MinusRoute::Collapsed;
    return o;
  }
};

void emit(ComputationReport r, const CommonFlags& flags, std::chrono::steady_clock::time_point t0) {
  if (flags.timing) {
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  if (flags.json) {
    print_json(r.to_json());
  } else {
    std::cout << r.to_text();
  }
}

int cmd_validate(const std::string& path, bool json) {
  const GridDiagram d = load_grid(path);
  const auto warnings = validate(d);
  const int components = component_count(d);
  if (json) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : warnings) w.push_back({{"column", x.column}, {"message", x.message}});
    nlohmann::json r = {{"diagram", grid_to_json(d)}, {"components", components}, {"knot", components == 1},
                        {"hash", canonical_hash(d)}, {"warnings", w}};
    const auto* b = identify_builtin(d);
    r["name"] = b ? nlohmann::json(b->name) : nlohmann::json(nullptr);
    print_json(r);
  } else {
    std::cout << "valid grid, n=" << d.size() << ", " << components
              << (components == 1 ? " component (knot)" : " components (link)") << "\n";
    for (const auto& x : warnings) std::cout << "warning: column " << x.column << ": " << x.message << "\n";
    std::cout << render_ascii(d);
  }
  return 0;
}

int cmd_table(bool json) {
  if (json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& b : builtin_grids()) {
      auto g = grid_to_json(b.diagram);
      g["name"] = b.name;
      g["aliases"] = b.aliases;
      g["description"] = b.description;
      g["hash"] = canonical_hash(b.diagram);
      list.push_back(std::move(g));
    }
    print_json({{"grids", list}});
  } else {
    for (const auto& b : builtin_grids()) {
      std::cout << b.name << "  n=" << b.diagram.size() << "  " << b.description;
      if (!b.aliases.empty()) {
        std::cout << "  (alias";
        for (const auto& a : b.aliases) std::cout << " " << a;
        std::cout << ")";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_fuzz(const FuzzOptions& options, bool json) {
  const auto summary = run_fuzz(options);
  if (json) {
    print_json(summary.to_json());
  } else {
    for (const auto& t : summary.trials) {
      std::cout << "trial " << t.index << ": " << (t.passed ? "pass" : "FAIL");
      if (t.passed) {
        std::cout << "  n " << t.start.size() << " -> " << t.end.size() << "  hat " << t.hat.to_string() << "  tau "
                  << t.invariants.tau;
      }
      std::cout << "\n";
    }
    std::cout << (summary.passed() ? "all trials passed" : "invariance violated") << "\n";
  }
  if (summary.passed()) return 0;
  for (const auto& t : summary.trials) {
    if (t.passed) continue;
    std::cerr << "trial " << t.index << " failed: " << t.failure << "\n";
    std::cerr << "# start\n" << serialize_grid(t.start) << "# end\n" << serialize_grid(t.end);
    std::cerr << "# moves:";
    for (const auto& m : t.moves) std::cerr << " " << to_string(m);
    std::cerr << "\n";
  }
  return 3;
}

int cmd_selftest(const std::string& fault, std::uint64_t seed) {
  if (fault == "maslov-off-by-one") {
    testing::set_maslov_fault(1);
  } else if (!fault.empty()) {
    throw ValidationError("unknown fault '" + fault + "'");
  }
  AcceptanceOptions options;
  options.seed = seed;
  const auto results = run_acceptance(options);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << format_result(r) << "\n";
    ok = ok && r.passed;
  }
  std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid homology calculator for knots"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gridhom::version()));

  std::string grid_path;
  bool json = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a grid diagram and trace its components");
  validate_cmd->add_option("grid", grid_path, "grid file, '-' for stdin, or built-in name")->required();
  validate_cmd->add_flag("--json", json, "JSON output");

  CommonFlags compute_flags;
  std::string flavor = "hat";
  auto* compute_cmd = app.add_subcommand("compute", "compute grid homology");
  compute_cmd->add_option("grid", grid_path, "grid file, '-' for stdin, or built-in name")->required();
  compute_cmd->add_option("--flavor", flavor, "tilde, hat or minus")
      ->check(CLI::IsMember({"tilde", "hat", "minus"}))
      ->capture_default_str();
  compute_flags.attach(compute_cmd, true);

  CommonFlags inv_flags;
  auto* inv_cmd = app.add_subcommand("invariants", "tau, genus and Alexander polynomial");
  inv_cmd->add_option("grid", grid_path, "grid file, '-' for stdin, or built-in name")->required();
  inv_flags.attach(inv_cmd, true);

  std::string out_path;
  auto* move_cmd = app.add_subcommand("move", "apply a Cromwell move");
  move_cmd->add_option("grid", grid_path, "grid file, '-' for stdin, or built-in name")->required();
  move_cmd->add_option("-o,--output", out_path, "write the result here instead of stdout");
  move_cmd->require_subcommand(1);
  int cols = -1, rows = -1, column = -1;
  std::string marker = "X", corner = "SW";
  auto* commute_cmd = move_cmd->add_subcommand("commute", "swap adjacent columns or rows");
  auto* cols_opt = commute_cmd->add_option("--cols", cols, "swap columns i and i+1 (mod n)");
  auto* rows_opt = commute_cmd->add_option("--rows", rows, "swap rows j and j+1 (mod n)");
  cols_opt->excludes(rows_opt);
  commute_cmd->require_option(1);
  auto* stab_cmd = move_cmd->add_subcommand("stabilize", "split the row and column of a marker");
  stab_cmd->add_option("--marker", marker, "O or X")->check(CLI::IsMember({"O", "X"}))->capture_default_str();
  stab_cmd->add_option("--column", column, "column of the marker")->required();
  stab_cmd->add_option("--corner", corner, "unmarked cell of the new 2x2 block: NW, NE, SW or SE")
      ->check(CLI::IsMember({"NW", "NE", "SW", "SE"}))
      ->capture_default_str();
  auto* destab_cmd = move_cmd->add_subcommand("destabilize", "remove a 2x2 stabilization block");
  destab_cmd->add_option("--column", column, "left column of the block")->required();

  gridhom::FuzzOptions fuzz;
  int fuzz_max_n = fuzz.bounds.max_n;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "check invariance under random Cromwell moves");
  fuzz_cmd->add_option("--n", fuzz.n, "size of the starting grids")->capture_default_str();
  fuzz_cmd->add_option("--moves", fuzz.moves, "moves per trial")->capture_default_str();
  fuzz_cmd->add_option("--trials", fuzz.trials, "number of trials")->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz.seed, "random seed")->capture_default_str();
  fuzz_cmd->add_option("--max-n", fuzz_max_n, "largest grid a stabilization may produce")->capture_default_str();
  fuzz_cmd->add_flag("--json", json, "JSON output");

  auto* table_cmd = app.add_subcommand("table", "list the built-in diagrams");
  table_cmd->add_flag("--json", json, "JSON output");

  std::string fault;
  std::uint64_t selftest_seed = gridhom::AcceptanceOptions{}.seed;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest_cmd->add_option("--inject-fault", fault, "deliberately corrupt a kernel (maslov-off-by-one)");
  selftest_cmd->add_option("--seed", selftest_seed, "seed for the random corpus")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    if (*validate_cmd) return cmd_validate(grid_path, json);
    if (*compute_cmd) {
      emit(compute_report(load_grid(grid_path), parse_flavor(flavor), compute_flags.options()), compute_flags, t0);
      return 0;
    }
    if (*inv_cmd) {
      emit(invariants_report(load_grid(grid_path), inv_flags.options()), inv_flags, t0);
      return 0;
    }
    if (*move_cmd) {
      const GridDiagram d = load_grid(grid_path);
      GridMove m = Destabilize{column};
      if (*commute_cmd) {
        m = cols >= 0 ? GridMove{ColumnCommute{cols}} : GridMove{RowCommute{rows}};
      } else if (*stab_cmd) {
        m = Stabilize{marker == "O" ? Marker::O : Marker::X, column, parse_corner(corner)};
      }
      const std::string text = serialize_grid(apply_move(d, m));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!(out << text)) throw ParseError("cannot write " + out_path);
      }
      return 0;
    }
    if (*fuzz_cmd) {
      fuzz.bounds.max_n = fuzz_max_n;
      fuzz.compute.minus.max_n = std::max(fuzz_max_n, fuzz.compute.minus.max_n);
      fuzz.compute.enumeration.max_n = std::max(fuzz_max_n, fuzz.compute.enumeration.max_n);
      return cmd_fuzz(fuzz, json);
    }
    if (*table_cmd) return cmd_table(json);
    if (*selftest_cmd) return cmd_selftest(fault, selftest_seed);
  } catch (const gridhom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gridhom::exit_code(e);
  }
  return 1;
}
