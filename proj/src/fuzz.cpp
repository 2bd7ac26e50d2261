#include "gridhom/fuzz.hpp"

#include <algorithm>

#include "gridhom/errors.hpp"
#include "gridhom/random.hpp"

namespace gridhom {

namespace {

FuzzTrial run_trial(const FuzzOptions& options, int index, std::uint64_t grid_seed, std::uint64_t move_seed) {
  FuzzTrial t;
  t.index = index;
  try {
    t.start = random_grid(options.n, grid_seed);
    auto seq = random_moves(t.start, options.moves, move_seed, options.bounds);
    t.end = seq.result;
    t.moves = std::move(seq.moves);
    const auto a = compute_invariants(t.start, options.compute);
    const auto b = compute_invariants(t.end, options.compute);
    t.hat = a.minus.hat;
    t.invariants = a.invariants;
    if (a.minus.hat != b.minus.hat) {
      t.failure = "hat polynomial changed: " + a.minus.hat.to_string() + " vs " + b.minus.hat.to_string();
    } else if (a.invariants.tau != b.invariants.tau) {
      t.failure = "tau changed: " + std::to_string(a.invariants.tau) + " vs " + std::to_string(b.invariants.tau);
    } else if (a.invariants.genus != b.invariants.genus) {
      t.failure = "genus changed";
    } else if (a.invariants.alexander != b.invariants.alexander) {
      t.failure = "Alexander polynomial changed";
    }
  } catch (const Error& e) {
    t.failure = e.what();
  }
  t.passed = t.failure.empty();
  return t;
}

}  // namespace

bool FuzzSummary::passed() const {
  return std::all_of(trials.begin(), trials.end(), [](const FuzzTrial& t) { return t.passed; });
}

nlohmann::json FuzzSummary::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& t : trials) {
    nlohmann::json moves = nlohmann::json::array();
    for (const auto& m : t.moves) moves.push_back(to_string(m));
    nlohmann::json j = {{"trial", t.index}, {"passed", t.passed}, {"start", grid_to_json(t.start)},
                        {"end", grid_to_json(t.end)}, {"moves", moves}};
    if (t.passed) {
      j["hat"] = t.hat.to_string();
      j["tau"] = t.invariants.tau;
      j["genus"] = t.invariants.genus;
      j["alexander"] = t.invariants.alexander.to_string();
    } else {
      j["failure"] = t.failure;
    }
    list.push_back(std::move(j));
  }
  const auto failed = std::count_if(trials.begin(), trials.end(), [](const FuzzTrial& t) { return !t.passed; });
  return {{"trials", list}, {"passed", passed()}, {"failures", failed}};
}

FuzzSummary run_fuzz(const FuzzOptions& options) {
  if (options.n < 2) throw ValidationError("fuzz needs n >= 2");
  if (options.moves < 0 || options.trials < 0) throw ValidationError("fuzz counts must be nonnegative");
  Rng rng(options.seed);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> seeds(static_cast<std::size_t>(options.trials));
  for (auto& s : seeds) s = {rng.next(), rng.next()};

  FuzzSummary summary;
  summary.trials.resize(seeds.size());
  const auto count = static_cast<long long>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    const auto u = static_cast<std::size_t>(i);
    summary.trials[u] = run_trial(options, static_cast<int>(i), seeds[u].first, seeds[u].second);
  }
  return summary;
}

}  // namespace gridhom
