#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "covenergy/error.hpp"

namespace covenergy {

using Vertex = std::size_t;

/// Unordered vertex pair, stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A path on three vertices x - y - z, canonically oriented so x < z.
struct Path3 {
  Vertex x = 0;
  Vertex y = 0;
  Vertex z = 0;

  friend bool operator==(const Path3&, const Path3&) = default;
  friend auto operator<=>(const Path3&, const Path3&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Validates the edge list and derives sorted adjacency.
  /// Throws Error{SelfLoop | DuplicateEdge | VertexOutOfRange}.
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(),
                                                            edges.size())) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Edges sorted lexicographically, each with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// Hop distance to a vertex set; `Unreachable` is an explicit state, not a
/// large number.
class Distance {
 public:
  static Distance hops(std::size_t value) { return Distance(value, true); }
  static Distance unreachable() { return Distance(0, false); }

  bool reachable() const noexcept { return reachable_; }
  /// Precondition: reachable().
  std::size_t value() const;

  friend bool operator==(const Distance&, const Distance&) = default;

 private:
  Distance(std::size_t value, bool reachable)
      : value_(value), reachable_(reachable) {}
  std::size_t value_;
  bool reachable_;
};

/// Every 3-vertex path exactly once, ordered by (y, x, z).
std::vector<Path3> enumerate_p3(const Graph& g);

/// BFS hop count from `v` to the nearest member of `set` (0 on members).
Distance distance_to_set(const Graph& g, std::span<const Vertex> set, Vertex v);

/// Multi-source BFS distances from `set` to every vertex.
std::vector<Distance> distances_to_set(const Graph& g,
                                       std::span<const Vertex> set);

std::vector<Vertex> pendant_vertices(const Graph& g);

/// The empty graph counts as connected.
bool is_connected(const Graph& g);

}  // namespace covenergy
