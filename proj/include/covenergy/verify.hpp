#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "covenergy/covering.hpp"
#include "covenergy/graph.hpp"

namespace covenergy::verify {

/// Seed for trial `index`; depends on nothing else, so results do not depend
/// on scheduling.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

struct CorpusConfig {
  std::size_t trials = 2000;
  std::uint64_t seed = 7;
  /// Connected graphs on fewer than 3 vertices have no P3 at all.
  std::size_t min_n = 3;
  std::size_t max_n = 12;
  std::vector<double> edge_probs{0.15, 0.3, 0.5};
  /// Inclusion probability of each vertex in the random candidate set.
  double candidate_prob = 0.5;
  /// Probability of adding each non-member to the minimum cover.
  double superset_prob = 0.25;
  std::size_t max_redraws = 10000;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

struct TrialOutcome {
  std::size_t index = 0;
  double edge_prob = 0.0;
  Graph graph;
  CoverSet candidate;
  bool candidate_is_cover = false;
  bool candidate_characterized = false;
  /// Minimum 3-covering plus random extra vertices.
  CoverSet valid_cover;
  TheoremReport distance_report;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Draws a connected G(n, p) from the trial seed, then checks the
/// edge-characterization biconditional on a random candidate set, and the
/// distance theorems, vertex-case totality and the edge disjointness rule on
/// every valid cover.
TrialOutcome run_trial(const CorpusConfig& cfg, std::size_t index);

struct CorpusResult {
  std::vector<TrialOutcome> trials;  // ordered by index

  std::size_t failures() const;
  std::size_t characterization_discrepancies() const;
  std::size_t valid_candidates() const;
  const TrialOutcome* first_failure() const;
};

CorpusResult run_corpus(const CorpusConfig& cfg);

}  // namespace covenergy::verify
