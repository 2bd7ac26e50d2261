#include "gridhom/acceptance.hpp"

#include <sys/resource.h>

#include <bit>
#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "gridhom/builtins.hpp"
#include "gridhom/errors.hpp"
#include "gridhom/fuzz.hpp"
#include "gridhom/homology.hpp"
#include "gridhom/invariants.hpp"
#include "gridhom/module.hpp"
#include "gridhom/random.hpp"
#include "gridhom/rectangles.hpp"
#include "gridhom/report.hpp"

namespace gridhom {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

long peak_rss_kib() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

struct Named {
  std::string name;
  GridDiagram diagram;
};

// Built-ins followed by seeded random knot grids with n cycling over 2..6.
std::vector<Named> corpus(const AcceptanceOptions& options) {
  std::vector<Named> out;
  for (const auto& b : builtin_grids()) out.push_back({b.name, b.diagram});
  Rng rng(options.seed);
  for (int i = 0; i < options.random_grids; ++i) {
    const int n = 2 + i % 5;
    out.push_back({"random-" + std::to_string(i), random_grid(n, rng.next())});
  }
  return out;
}

struct Computed {
  std::string name;
  GridDiagram diagram;
  std::optional<InvariantBundle> bundle;
  std::string error;
};

// Runs body, turning library exceptions into a failed criterion.
CriterionResult criterion(int id, std::string name, const std::function<bool(std::ostringstream&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  std::ostringstream detail;
  const auto t0 = Clock::now();
  try {
    r.passed = body(detail);
  } catch (const std::exception& e) {
    r.passed = false;
    detail << "exception: " << e.what();
  }
  r.seconds = seconds_since(t0);
  r.detail = detail.str();
  return r;
}

bool unknot_tilde(std::ostringstream& out) {
  const auto t0 = Clock::now();
  bool ok = true;
  const std::pair<const char*, std::int64_t> expected[] = {{"unknot-1", 1}, {"unknot-2", 2}, {"unknot-3", 4}};
  for (const auto& [name, rank] : expected) {
    const auto total = homology_ranks(build_tilde(find_builtin(name)->diagram)).total();
    out << name << "=" << total << " ";
    ok = ok && total == rank;
  }
  const double s = seconds_since(t0);
  out << "in " << s << " s (limit 1 s)";
  return ok && s < 1.0;
}

bool trefoil(std::ostringstream& out) {
  const auto t0 = Clock::now();
  const auto& d = find_builtin("trefoil-lh")->diagram;
  const auto b = compute_invariants(d);
  const auto& m = b.minus.module;
  const bool module_ok = m.tower.maslov == 2 && m.torsion.size() == 1 && m.torsion[0].maslov == 1 &&
                         m.torsion[0].length == 1;
  PoincarePolynomial by_maslov;
  for (const auto& [g, c] : b.minus.hat.terms()) by_maslov.add({g.maslov, 0}, c);
  PoincarePolynomial expected_hat;
  for (int mm = 0; mm <= 2; ++mm) expected_hat.add({mm, 0}, 1);
  const bool hat_ok = by_maslov == expected_hat;
  LaurentPolynomial delta;
  delta.add(-1, 1);
  delta.add(0, -1);
  delta.add(1, 1);
  const bool inv_ok = b.invariants.tau == -1 && b.invariants.genus == 1 && b.invariants.alexander == delta &&
                      alexander_from_generators(d) == delta;
  const double s = seconds_since(t0);
  out << "module " << m.to_json().dump() << ", hat " << b.minus.hat.to_string() << ", tau " << b.invariants.tau
      << ", genus " << b.invariants.genus << ", alexander " << b.invariants.alexander.to_string() << ", " << s
      << " s (limit 30 s)";
  return module_ok && hat_ok && inv_ok && s < 30.0;
}

bool d_squared(const std::vector<Named>& diagrams, std::ostringstream& out) {
  std::size_t complexes = 0;
  std::vector<std::string> bad;
  for (const auto& [name, d] : diagrams) {
    const GeneratorTable gens(d);
    const RectangleTable all(d, gens, RectangleFilter::AvoidAllMarkers);
    ++complexes;
    if (!verify_d_squared(build_tilde(gens, all))) bad.push_back(name + " tilde");
    const auto result = compute_minus(d);
    const MinusComplex mc(d, MinusRoute::Collapsed, MinusOptions{}.max_n);
    for (int s = result.top_slice; s >= result.bottom_slice; --s) {
      ++complexes;
      if (!verify_d_squared(mc.slice(s))) bad.push_back(name + " slice " + std::to_string(s));
    }
    if (d.size() <= 4) {
      const MinusComplex full(d, MinusRoute::FullVariables, MinusOptions{}.max_n);
      for (int s = result.top_slice; s >= result.top_slice - 4; --s) {
        ++complexes;
        if (!verify_d_squared(full.slice(s))) bad.push_back(name + " full slice " + std::to_string(s));
      }
    }
  }
  out << complexes << " complexes on " << diagrams.size() << " diagrams, " << bad.size() << " failures";
  if (!bad.empty()) out << " (first: " << bad.front() << ")";
  return bad.empty();
}

// Every knot grid with n <= 5, every rectangle (empty or not) between every
// pair of generators differing in two columns.
bool grading_drop(std::ostringstream& out) {
  std::size_t diagrams = 0, rects = 0, empty = 0, bad = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> o(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
    std::iota(o.begin(), o.end(), 0);
    do {
      std::iota(x.begin(), x.end(), 0);
      do {
        const GridDiagram d(o, x);
        if (!is_knot(d)) continue;
        ++diagrams;
        const GeneratorTable gens(d);
        for (std::size_t id = 0; id < gens.size(); ++id) {
          const auto& gx = gens[id];
          const std::span<const std::uint8_t> sx(gx.sigma.data(), static_cast<std::size_t>(n));
          for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
              if (a == b) continue;
              const Rectangle r = rectangle_between(d, sx, a, b);
              Permutation y = gx.sigma;
              std::swap(y[static_cast<std::size_t>(a)], y[static_cast<std::size_t>(b)]);
              const auto& gy = gens[gens.id_of(y)];
              const int os = std::popcount(r.o_hits), xs = std::popcount(r.x_hits);
              ++rects;
              // Interior points of x add 2 each; they vanish for empty rectangles.
              const int dm = 1 - 2 * os + 2 * r.interior_points;
              if (gx.maslov - gy.maslov != dm || gx.alexander - gy.alexander != xs - os) ++bad;
              if (r.empty) ++empty;
            }
          }
        }
      } while (std::next_permutation(x.begin(), x.end()));
    } while (std::next_permutation(o.begin(), o.end()));
  }
  out << rects << " rectangles (" << empty << " empty) on " << diagrams << " knot diagrams, " << bad << " violations";
  return bad == 0 && rects > 0;
}

bool tensor_relation(const std::vector<Named>& diagrams, std::size_t random_count, std::ostringstream& out) {
  std::size_t checked = 0;
  std::vector<std::string> bad;
  const std::size_t builtins = builtin_grids().size();
  for (std::size_t i = 0; i < diagrams.size() && i < builtins + random_count; ++i) {
    const auto& [name, d] = diagrams[i];
    const auto tilde = homology_ranks(build_tilde(d));
    const auto q = tilde.divide_w(d.size() - 1);
    ++checked;
    if (!q || !q->nonnegative() || q->times_w(d.size() - 1) != tilde) bad.push_back(name);
  }
  out << checked << " diagrams, " << bad.size() << " inexact";
  if (!bad.empty()) out << " (first: " << bad.front() << ")";
  return bad.empty();
}

bool tower_diagonal(const UModuleDecomposition& m) { return m.tower.maslov == 2 * m.tower.alexander; }

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  const auto diagrams = corpus(options);

  results.push_back(criterion(1, "unknot tilde ranks 1, 2, 4", unknot_tilde));
  results.push_back(criterion(2, "left-handed trefoil minus, hat, tau, genus, Alexander", trefoil));
  results.push_back(criterion(3, "d^2 = 0 for tilde and minus slices",
                              [&](std::ostringstream& out) { return d_squared(diagrams, out); }));
  results.push_back(criterion(4, "grading-drop law on every rectangle, n <= 5", grading_drop));
  results.push_back(criterion(5, "tilde divides exactly by (1 + q^-1 t^-1)^(n-1)", [&](std::ostringstream& out) {
    return tensor_relation(diagrams, static_cast<std::size_t>(options.random_grids / 2), out);
  }));

  FuzzOptions fuzz;
  fuzz.n = 5;
  fuzz.moves = 10;
  fuzz.trials = options.fuzz_trials;
  fuzz.seed = options.seed;
  std::optional<FuzzSummary> fuzz_summary;
  results.push_back(criterion(6, "move invariance of hat, tau, genus, Alexander", [&](std::ostringstream& out) {
    fuzz_summary = run_fuzz(fuzz);
    std::size_t failed = 0;
    for (const auto& t : fuzz_summary->trials) failed += t.passed ? 0 : 1;
    out << fuzz_summary->trials.size() << " trials (n=" << fuzz.n << ", " << fuzz.moves << " moves), " << failed
        << " failures";
    for (const auto& t : fuzz_summary->trials) {
      if (!t.passed) {
        out << " (trial " << t.index << ": " << t.failure << ")";
        break;
      }
    }
    return failed == 0;
  }));

  // Criteria 7-9 share one invariant computation per corpus diagram; the
  // fuzz end diagrams join the corpus for the tower check.
  std::vector<Computed> computed;
  for (const auto& [name, d] : diagrams) {
    Computed c{name, d, std::nullopt, {}};
    try {
      c.bundle = compute_invariants(d);
    } catch (const std::exception& e) {
      c.error = e.what();
    }
    computed.push_back(std::move(c));
  }
  auto first_error = [&](std::ostringstream& out) {
    for (const auto& c : computed) {
      if (!c.bundle) {
        out << " (" << c.name << ": " << c.error << ")";
        return false;
      }
    }
    return true;
  };

  results.push_back(criterion(7, "universal coefficient consistency", [&](std::ostringstream& out) {
    std::size_t bad = 0;
    for (const auto& c : computed) {
      if (c.bundle && !uct_check(c.bundle->minus.module, c.bundle->minus.hat)) ++bad;
    }
    out << computed.size() << " diagrams, " << bad << " mismatches";
    return first_error(out) && bad == 0;
  }));
  results.push_back(criterion(8, "Alexander polynomial: generators vs homology", [&](std::ostringstream& out) {
    std::size_t bad = 0;
    for (const auto& c : computed) {
      if (c.bundle && alexander_from_generators(c.diagram) != alexander_from_homology(c.bundle->minus.hat)) ++bad;
    }
    out << computed.size() << " diagrams, " << bad << " mismatches";
    return first_error(out) && bad == 0;
  }));
  results.push_back(criterion(9, "tower top has Maslov = 2 Alexander", [&](std::ostringstream& out) {
    std::size_t checked = 0, bad = 0;
    for (const auto& c : computed) {
      if (!c.bundle) continue;
      ++checked;
      if (!tower_diagonal(c.bundle->minus.module)) ++bad;
    }
    if (fuzz_summary) {
      for (const auto& t : fuzz_summary->trials) {
        if (!t.passed) continue;
        ++checked;
        if (!tower_diagonal(compute_minus(t.end).module)) ++bad;
      }
    }
    out << checked << " diagrams (corpus and fuzz outputs), " << bad << " off-diagonal towers";
    return first_error(out) && bad == 0 && (fuzz_summary.has_value());
  }));

  results.push_back(criterion(10, "tilde homology of a random 7x7 knot grid", [&](std::ostringstream& out) {
    Rng rng(options.seed ^ 0x7777);
    const auto d = random_grid(7, rng.next());
    const auto t0 = Clock::now();
    const auto ranks = homology_ranks(build_tilde(d));
    const double s = seconds_since(t0);
    const double mib = static_cast<double>(peak_rss_kib()) / 1024.0;
    out << "total rank " << ranks.total() << " in " << s << " s (limit 60 s), peak RSS " << mib
        << " MiB (limit 2048 MiB)";
    return s < 60.0 && mib < 2048.0 && ranks.total() > 0;
  }));
  return results;
}

std::string format_result(const CriterionResult& r) {
  char head[32];
  std::snprintf(head, sizeof head, "%s %2d  ", r.passed ? "PASS" : "FAIL", r.id);
  std::ostringstream out;
  out << head << r.name << ": " << r.detail;
  char tail[32];
  std::snprintf(tail, sizeof tail, "  [%.2f s]", r.seconds);
  out << tail;
  return out.str();
}

}  // namespace gridhom
