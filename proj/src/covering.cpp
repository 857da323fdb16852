#include "covenergy/covering.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace covenergy {

CoverSet::CoverSet(std::size_t n, std::vector<Vertex> members, CoverKind kind)
    : n_(n), members_(std::move(members)), kind_(kind) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (!members_.empty() && members_.back() >= n_) {
    throw Error(ErrorCode::VertexOutOfRange,
                "cover member " + std::to_string(members_.back()) +
                    " with n=" + std::to_string(n_));
  }
}

bool CoverSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> CoverSet::mask() const {
  std::vector<char> m(n_, 0);
  for (Vertex v : members_) m[v] = 1;
  return m;
}

namespace {

void require_same_order(const Graph& g, const CoverSet& q) {
  if (q.graph_order() != g.order()) {
    throw Error(ErrorCode::InvalidParams,
                "cover built for n=" + std::to_string(q.graph_order()) +
                    " used with a graph of order " +
                    std::to_string(g.order()));
  }
}

// A hitting-set instance: every set must contain a chosen vertex. Sets are
// the P3s (k = 3) or the edges (k = 2), listed in the order the branching
// rule prefers: middle vertex first for P3s.
struct HittingInstance {
  std::size_t n = 0;
  std::vector<std::vector<Vertex>> sets;
};

HittingInstance p3_instance(const Graph& g) {
  HittingInstance inst{g.order(), {}};
  for (const auto& p : enumerate_p3(g)) inst.sets.push_back({p.y, p.x, p.z});
  return inst;
}

HittingInstance edge_instance(const Graph& g) {
  HittingInstance inst{g.order(), {}};
  for (const auto& e : g.edges()) inst.sets.push_back({e.u, e.v});
  return inst;
}

std::vector<Vertex> bruteforce_hitting_set(const HittingInstance& inst,
                                           std::size_t max_n) {
  if (inst.n > max_n || inst.n > 64) {
    throw Error(ErrorCode::SizeBoundExceeded,
                "n=" + std::to_string(inst.n) + " exceeds brute-force bound " +
                    std::to_string(std::min<std::size_t>(max_n, 64)));
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(inst.sets.size());
  for (const auto& s : inst.sets) {
    std::uint64_t m = 0;
    for (Vertex v : s) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  auto hits_all = [&](std::uint64_t chosen) {
    return std::all_of(masks.begin(), masks.end(),
                       [&](std::uint64_t m) { return (m & chosen) != 0; });
  };

  const std::size_t n = inst.n;
  std::vector<Vertex> combo;
  for (std::size_t k = 0; k <= n; ++k) {
    combo.resize(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      std::uint64_t chosen = 0;
      for (Vertex v : combo) chosen |= std::uint64_t{1} << v;
      if (hits_all(chosen)) return combo;
      // Next combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  // Choosing every vertex always succeeds, so this is unreachable.
  throw std::logic_error("brute-force hitting set exhausted");
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const HittingInstance& inst)
      : inst_(inst), chosen_(inst.n, 0), forbidden_(inst.n, 0) {}

  std::vector<Vertex> solve() {
    best_ = greedy();
    current_.clear();
    search();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  bool hit(const std::vector<Vertex>& s) const {
    return std::any_of(s.begin(), s.end(),
                       [&](Vertex v) { return chosen_[v] != 0; });
  }

  std::vector<Vertex> greedy() {
    std::vector<char> saved = chosen_;
    std::vector<Vertex> picked;
    while (true) {
      std::vector<std::size_t> score(inst_.n, 0);
      bool any = false;
      for (const auto& s : inst_.sets) {
        if (hit(s)) continue;
        any = true;
        for (Vertex v : s) ++score[v];
      }
      if (!any) break;
      auto top = std::max_element(score.begin(), score.end());
      Vertex v = static_cast<Vertex>(top - score.begin());
      chosen_[v] = 1;
      picked.push_back(v);
    }
    chosen_ = std::move(saved);
    return picked;
  }

  // Greedy packing of pairwise-disjoint unhit sets; each needs its own vertex.
  std::size_t lower_bound() const {
    std::vector<char> used(inst_.n, 0);
    std::size_t count = 0;
    for (const auto& s : inst_.sets) {
      if (hit(s)) continue;
      if (std::any_of(s.begin(), s.end(),
                      [&](Vertex v) { return used[v] != 0; })) {
        continue;
      }
      for (Vertex v : s) used[v] = 1;
      ++count;
    }
    return count;
  }

  void search() {
    const std::vector<Vertex>* target = nullptr;
    for (const auto& s : inst_.sets) {
      if (!hit(s)) {
        target = &s;
        break;
      }
    }
    if (target == nullptr) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + lower_bound() >= best_.size()) return;

    std::vector<Vertex> newly_forbidden;
    for (Vertex v : *target) {
      if (forbidden_[v]) continue;
      chosen_[v] = 1;
      current_.push_back(v);
      search();
      current_.pop_back();
      chosen_[v] = 0;
      // Later branches may assume v stays out.
      forbidden_[v] = 1;
      newly_forbidden.push_back(v);
    }
    for (Vertex v : newly_forbidden) forbidden_[v] = 0;
  }

  const HittingInstance& inst_;
  std::vector<char> chosen_;
  std::vector<char> forbidden_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

bool has_q_neighbor(const Graph& g, const std::vector<char>& in_q, Vertex v) {
  const auto& nbrs = g.neighbors(v);
  return std::any_of(nbrs.begin(), nbrs.end(),
                     [&](Vertex w) { return in_q[w] != 0; });
}

std::vector<Vertex> q_neighbors(const Graph& g, const std::vector<char>& in_q,
                                Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (in_q[w]) out.push_back(w);
  }
  return out;
}

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

bool is_3_covering(const Graph& g, const CoverSet& q) {
  require_same_order(g, q);
  const auto in_q = q.mask();
  for (const auto& p : enumerate_p3(g)) {
    if (!in_q[p.x] && !in_q[p.y] && !in_q[p.z]) return false;
  }
  return true;
}

bool is_2_covering(const Graph& g, const CoverSet& q) {
  require_same_order(g, q);
  const auto in_q = q.mask();
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return in_q[e.u] || in_q[e.v];
  });
}

CoverSet min_3_covering_bruteforce(const Graph& g, std::size_t max_n) {
  return CoverSet(g.order(), bruteforce_hitting_set(p3_instance(g), max_n),
                  CoverKind::ThreeCovering);
}

CoverSet min_3_covering_exact(const Graph& g) {
  auto inst = p3_instance(g);
  return CoverSet(g.order(), BranchAndBound(inst).solve(),
                  CoverKind::ThreeCovering);
}

CoverSet min_2_covering_bruteforce(const Graph& g, std::size_t max_n) {
  return CoverSet(g.order(), bruteforce_hitting_set(edge_instance(g), max_n),
                  CoverKind::TwoCovering);
}

CoverSet min_2_covering_exact(const Graph& g) {
  auto inst = edge_instance(g);
  return CoverSet(g.order(), BranchAndBound(inst).solve(),
                  CoverKind::TwoCovering);
}

std::vector<EdgeClassification> classify_noncovered_edges(const Graph& g,
                                                          const CoverSet& q) {
  require_same_order(g, q);
  const auto in_q = q.mask();
  std::vector<EdgeClassification> out;
  out.reserve(g.size());
  // Indices into `out` of the uncovered edges at each vertex.
  std::vector<std::vector<std::size_t>> uncovered_at(g.order());

  for (const auto& e : g.edges()) {
    EdgeClassification c{e, 0, {}};
    if (in_q[e.u] || in_q[e.v]) {
      c.classes = kCovered;
      out.push_back(std::move(c));
      continue;
    }
    const bool u_pendant = g.degree(e.u) == 1;
    const bool v_pendant = g.degree(e.v) == 1;
    if ((u_pendant && has_q_neighbor(g, in_q, e.v)) ||
        (v_pendant && has_q_neighbor(g, in_q, e.u))) {
      c.classes |= kPendant2;
    }
    const auto qu = q_neighbors(g, in_q, e.u);
    const auto qv = q_neighbors(g, in_q, e.v);
    if (!u_pendant && !v_pendant && !qu.empty() && !qv.empty() &&
        !(qu.size() == 1 && qv.size() == 1 && qu.front() == qv.front())) {
      c.classes |= kHandle;
    }
    std::vector<Vertex> common;
    std::set_intersection(qu.begin(), qu.end(), qv.begin(), qv.end(),
                          std::back_inserter(common));
    if (!common.empty()) c.classes |= kTriangle;
    if (c.classes == 0) {
      c.classes = kViolation;
      c.reason = "uncovered edge " + edge_text(e) +
                 " is not a 2-pendant, handle or triangle edge";
    }
    uncovered_at[e.u].push_back(out.size());
    uncovered_at[e.v].push_back(out.size());
    out.push_back(std::move(c));
  }

  // Two distinct edges of a simple graph share at most one vertex, so any
  // pair of uncovered edges at the same vertex overlaps in exactly one.
  for (Vertex w = 0; w < g.order(); ++w) {
    const auto& idx = uncovered_at[w];
    if (idx.size() < 2) continue;
    for (std::size_t i : idx) {
      for (std::size_t j : idx) {
        if (i == j) continue;
        auto& c = out[i];
        c.classes |= kViolation;
        if (!c.reason.empty()) c.reason += "; ";
        c.reason += "shares only vertex " + std::to_string(w) +
                    " with uncovered edge " + edge_text(out[j].edge);
      }
    }
  }
  return out;
}

std::string_view to_string(VertexCaseKind kind) {
  switch (kind) {
    case VertexCaseKind::InQ: return "InQ";
    case VertexCaseKind::PendantOf1Path: return "PendantOf1Path";
    case VertexCaseKind::PendantOf2Path: return "PendantOf2Path";
    case VertexCaseKind::MiddleOf2PendantPath: return "MiddleOf2PendantPath";
    case VertexCaseKind::VPath: return "VPath";
    case VertexCaseKind::HandleMiddleEndpoint: return "HandleMiddleEndpoint";
    case VertexCaseKind::TriangleEdgeEndpoint: return "TriangleEdgeEndpoint";
  }
  return "Unknown";
}

std::string edge_class_names(unsigned classes) {
  static constexpr std::pair<EdgeClass, const char*> kNames[] = {
      {kCovered, "Covered"},   {kPendant2, "Pendant2"},
      {kHandle, "Handle"},     {kTriangle, "Triangle"},
      {kViolation, "Violation"},
  };
  std::string out;
  for (auto [flag, name] : kNames) {
    if ((classes & flag) == 0) continue;
    if (!out.empty()) out += "|";
    out += name;
  }
  return out;
}

bool VertexCase::has(VertexCaseKind k) const {
  return std::find(cases.begin(), cases.end(), k) != cases.end();
}

VertexCase classify_vertex(const Graph& g, const CoverSet& q, Vertex v) {
  if (v >= g.order()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  if (!is_3_covering(g, q)) {
    throw Error(ErrorCode::NotACovering, "q is not a 3-covering");
  }
  const auto in_q = q.mask();
  VertexCase out{v, {}};
  if (in_q[v]) {
    out.cases.push_back(VertexCaseKind::InQ);
    return out;
  }
  if (g.degree(v) == 1) {
    const Vertex w = g.neighbors(v).front();
    if (in_q[w]) {
      out.cases.push_back(VertexCaseKind::PendantOf1Path);
    } else if (has_q_neighbor(g, in_q, w)) {
      out.cases.push_back(VertexCaseKind::PendantOf2Path);
    }
    return out;
  }

  const auto qn = q_neighbors(g, in_q, v);
  const auto& nbrs = g.neighbors(v);
  const bool has_pendant_tail =
      std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) {
        return !in_q[w] && g.degree(w) == 1;
      });
  if (!qn.empty() && has_pendant_tail) {
    out.cases.push_back(VertexCaseKind::MiddleOf2PendantPath);
  }
  if (qn.size() >= 2) out.cases.push_back(VertexCaseKind::VPath);

  bool handle = false;
  bool triangle = false;
  for (const auto& c : classify_noncovered_edges(g, q)) {
    if (c.edge.u != v && c.edge.v != v) continue;
    handle = handle || c.has(kHandle);
    triangle = triangle || c.has(kTriangle);
  }
  if (handle) out.cases.push_back(VertexCaseKind::HandleMiddleEndpoint);
  if (triangle) out.cases.push_back(VertexCaseKind::TriangleEdgeEndpoint);
  return out;
}

TheoremReport check_distance_theorems(const Graph& g, const CoverSet& q) {
  require_same_order(g, q);
  if (!is_connected(g)) {
    throw Error(ErrorCode::NotConnected, "distance theorems need a connected graph");
  }
  if (!is_3_covering(g, q)) {
    throw Error(ErrorCode::NotACovering, "q is not a 3-covering");
  }
  TheoremReport report{"1,2,5", {}};
  const auto dist = distances_to_set(g, q.members());
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& d = dist[v];
    const std::string where = d.reachable()
                                  ? "distance " + std::to_string(d.value())
                                  : std::string("unreachable");
    const bool far = !d.reachable() || d.value() > 2;
    if (far) {
      report.witnesses.push_back(
          {"1", "vertex", {v}, "vertex at " + where + " from Q"});
    }
    if (d.reachable() && d.value() == 2 && g.degree(v) != 1) {
      report.witnesses.push_back(
          {"2", "vertex", {v},
           "distance-2 vertex has degree " + std::to_string(g.degree(v))});
    }
    if (far && g.degree(v) == 1) {
      report.witnesses.push_back(
          {"5", "vertex", {v}, "pendant vertex ends a pendant path at " + where});
    }
  }
  return report;
}

bool characterization_holds(const Graph& g, const CoverSet& q) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::NotConnected,
                "characterization needs a connected graph");
  }
  const auto classes = classify_noncovered_edges(g, q);
  return std::none_of(classes.begin(), classes.end(),
                      [](const EdgeClassification& c) {
                        return c.has(kViolation);
                      });
}

}  // namespace covenergy
