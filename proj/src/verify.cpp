#include "covenergy/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "covenergy/families.hpp"
#include "rng.hpp"

namespace covenergy::verify {

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = index;
  std::uint64_t mixed = master ^ detail::splitmix64(state);
  return detail::splitmix64(mixed);
}

namespace {

void check_valid_cover(const Graph& g, const CoverSet& q, const char* label,
                       TrialOutcome& out) {
  const std::string who(label);
  if (!characterization_holds(g, q)) {
    out.failures.push_back(who + ": valid 3-covering fails the edge "
                                 "characterization");
  }
  const auto classes = classify_noncovered_edges(g, q);
  // Disjointness: uncovered edges never share exactly one vertex.
  std::vector<int> uncovered_degree(g.order(), 0);
  for (const auto& c : classes) {
    if (c.has(kCovered)) continue;
    ++uncovered_degree[c.edge.u];
    ++uncovered_degree[c.edge.v];
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (uncovered_degree[v] > 1) {
      out.failures.push_back(who + ": uncovered edges meet at vertex " +
                             std::to_string(v));
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (classify_vertex(g, q, v).cases.empty()) {
      out.failures.push_back(who + ": vertex " + std::to_string(v) +
                             " matches no vertex case");
    }
  }
  auto report = check_distance_theorems(g, q);
  for (const auto& w : report.witnesses) {
    out.failures.push_back(who + ": theorem " + w.theorem + " witness: " +
                           w.detail);
  }
  out.distance_report = std::move(report);
}

}  // namespace

TrialOutcome run_trial(const CorpusConfig& cfg, std::size_t index) {
  if (cfg.edge_probs.empty() || cfg.min_n > cfg.max_n || cfg.min_n == 0) {
    throw Error(ErrorCode::InvalidParams, "bad corpus configuration");
  }
  std::uint64_t state = trial_seed(cfg.seed, index);
  TrialOutcome out;
  out.index = index;
  out.edge_prob = cfg.edge_probs[index % cfg.edge_probs.size()];
  const std::size_t n =
      cfg.min_n + detail::splitmix64(state) % (cfg.max_n - cfg.min_n + 1);

  bool connected = false;
  for (std::size_t attempt = 0; attempt < cfg.max_redraws; ++attempt) {
    out.graph = gen_random(n, out.edge_prob, detail::splitmix64(state));
    if (is_connected(out.graph)) {
      connected = true;
      break;
    }
  }
  if (!connected) {
    throw Error(ErrorCode::NotConnected,
                "no connected sample after " +
                    std::to_string(cfg.max_redraws) + " redraws");
  }
  const Graph& g = out.graph;

  std::vector<Vertex> picked;
  for (Vertex v = 0; v < n; ++v) {
    if (detail::uniform01(state) < cfg.candidate_prob) picked.push_back(v);
  }
  out.candidate = CoverSet(n, picked);
  out.candidate_is_cover = is_3_covering(g, out.candidate);
  out.candidate_characterized = characterization_holds(g, out.candidate);
  if (out.candidate_is_cover != out.candidate_characterized) {
    out.failures.push_back(
        std::string("characterization discrepancy: is_3_covering=") +
        (out.candidate_is_cover ? "true" : "false") +
        " characterization_holds=" +
        (out.candidate_characterized ? "true" : "false"));
  }
  if (out.candidate_is_cover) {
    check_valid_cover(g, out.candidate, "candidate", out);
  }

  auto base = min_3_covering_exact(g).members();
  for (Vertex v = 0; v < n; ++v) {
    if (detail::uniform01(state) < cfg.superset_prob) base.push_back(v);
  }
  out.valid_cover = CoverSet(n, base);
  if (!is_3_covering(g, out.valid_cover)) {
    out.failures.push_back("superset of a minimum cover is not a 3-covering");
  } else {
    check_valid_cover(g, out.valid_cover, "superset", out);
  }
  return out;
}

std::size_t CorpusResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(),
                    [](const TrialOutcome& t) { return !t.ok(); }));
}

std::size_t CorpusResult::characterization_discrepancies() const {
  return static_cast<std::size_t>(std::count_if(
      trials.begin(), trials.end(), [](const TrialOutcome& t) {
        return t.candidate_is_cover != t.candidate_characterized;
      }));
}

std::size_t CorpusResult::valid_candidates() const {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(),
                    [](const TrialOutcome& t) { return t.candidate_is_cover; }));
}

const TrialOutcome* CorpusResult::first_failure() const {
  auto it = std::find_if(trials.begin(), trials.end(),
                         [](const TrialOutcome& t) { return !t.ok(); });
  return it == trials.end() ? nullptr : &*it;
}

CorpusResult run_corpus(const CorpusConfig& cfg) {
  CorpusResult result;
  result.trials.resize(cfg.trials);
  std::size_t workers = cfg.threads != 0
                            ? cfg.threads
                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(cfg.trials, 1));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cfg.trials) return;
      try {
        result.trials[i] = run_trial(cfg, i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);
  return result;
}

}  // namespace covenergy::verify
