#include "covenergy/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace covenergy {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorCode::NotACovering: return "NotACovering";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::ComplexRoots: return "ComplexRoots";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NonIntegerMatrix: return "NonIntegerMatrix";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
    : adj_(n) {
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge {" + std::to_string(a) + "," + std::to_string(b) +
                      "} with n=" + std::to_string(n));
    }
    if (a == b) {
      throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(a));
    }
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge, "edge {" + std::to_string(dup->u) +
                                              "," + std::to_string(dup->v) +
                                              "}");
  }
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Distance::value() const {
  if (!reachable_) {
    throw std::logic_error("Distance::value() on an unreachable distance");
  }
  return value_;
}

std::vector<Path3> enumerate_p3(const Graph& g) {
  std::vector<Path3> paths;
  for (Vertex y = 0; y < g.order(); ++y) {
    const auto& nbrs = g.neighbors(y);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        paths.push_back(Path3{nbrs[i], y, nbrs[j]});
      }
    }
  }
  return paths;
}

std::vector<Distance> distances_to_set(const Graph& g,
                                       std::span<const Vertex> set) {
  std::vector<Distance> dist(g.order(), Distance::unreachable());
  std::queue<Vertex> frontier;
  for (Vertex s : set) {
    if (s >= g.order()) {
      throw Error(ErrorCode::VertexOutOfRange, "set member " +
                                                   std::to_string(s));
    }
    if (!dist[s].reachable()) {
      dist[s] = Distance::hops(0);
      frontier.push(s);
    }
  }
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    std::size_t next = dist[u].value() + 1;
    for (Vertex w : g.neighbors(u)) {
      if (!dist[w].reachable()) {
        dist[w] = Distance::hops(next);
        frontier.push(w);
      }
    }
  }
  return dist;
}

Distance distance_to_set(const Graph& g, std::span<const Vertex> set,
                         Vertex v) {
  if (v >= g.order()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  return distances_to_set(g, set)[v];
}

std::vector<Vertex> pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const Vertex root = 0;
  auto dist = distances_to_set(g, std::span<const Vertex>(&root, 1));
  return std::all_of(dist.begin(), dist.end(),
                     [](const Distance& d) { return d.reachable(); });
}

}  // namespace covenergy
