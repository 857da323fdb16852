#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "covenergy/graph.hpp"

namespace covenergy {

enum class CoverKind { TwoCovering, ThreeCovering };

/// Sorted, duplicate-free vertex subset of a graph of known order.
class CoverSet {
 public:
  CoverSet() = default;
  /// Sorts and deduplicates; throws VertexOutOfRange for members >= n.
  CoverSet(std::size_t n, std::vector<Vertex> members,
           CoverKind kind = CoverKind::ThreeCovering);

  std::size_t graph_order() const noexcept { return n_; }
  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  CoverKind kind() const noexcept { return kind_; }
  bool contains(Vertex v) const;
  /// Membership flags indexed by vertex.
  std::vector<char> mask() const;

  friend bool operator==(const CoverSet&, const CoverSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Vertex> members_;
  CoverKind kind_ = CoverKind::ThreeCovering;
};

inline constexpr std::size_t kDefaultBruteforceBound = 20;

bool is_3_covering(const Graph& g, const CoverSet& q);
bool is_2_covering(const Graph& g, const CoverSet& q);

/// Subsets in increasing size, lexicographic within a size; the first
/// 3-covering found wins. Throws SizeBoundExceeded when g.order() > max_n.
CoverSet min_3_covering_bruteforce(const Graph& g,
                                   std::size_t max_n = kDefaultBruteforceBound);
/// Branch and bound over an uncovered P3 (x, y, z): try y, then x, then z.
CoverSet min_3_covering_exact(const Graph& g);

/// Minimum vertex cover counterparts, used by `mincover --k 2`.
CoverSet min_2_covering_bruteforce(const Graph& g,
                                   std::size_t max_n = kDefaultBruteforceBound);
CoverSet min_2_covering_exact(const Graph& g);

// --- Classification of non-covered edges and vertices ---------------------

/// Bit flags; an edge may carry Handle and Triangle at once.
enum EdgeClass : unsigned {
  kCovered = 1u << 0,
  kPendant2 = 1u << 1,
  kHandle = 1u << 2,
  kTriangle = 1u << 3,
  kViolation = 1u << 4,
};

struct EdgeClassification {
  Edge edge;
  unsigned classes = 0;
  /// Empty unless kViolation is set.
  std::string reason;

  bool has(EdgeClass c) const noexcept { return (classes & c) != 0; }
};

/// Accepts any vertex set. An uncovered edge that is none of
/// Pendant2/Handle/Triangle is a Violation, and so is every pair of uncovered
/// edges sharing exactly one vertex.
std::vector<EdgeClassification> classify_noncovered_edges(const Graph& g,
                                                          const CoverSet& q);

enum class VertexCaseKind {
  InQ,
  PendantOf1Path,
  PendantOf2Path,
  MiddleOf2PendantPath,
  VPath,
  HandleMiddleEndpoint,
  TriangleEdgeEndpoint,
};

std::string_view to_string(VertexCaseKind kind);
std::string edge_class_names(unsigned classes);

struct VertexCase {
  Vertex vertex = 0;
  /// Every case the vertex satisfies, in enum order.
  std::vector<VertexCaseKind> cases;

  bool has(VertexCaseKind k) const;
};

/// Throws NotACovering when q is not a 3-covering of g.
VertexCase classify_vertex(const Graph& g, const CoverSet& q, Vertex v);

// --- Theorem checkers ------------------------------------------------------

struct Witness {
  /// Which statement failed, e.g. "distance<=2" or "distance2-pendant".
  std::string theorem;
  std::string kind;  // "vertex" | "edge" | "path"
  std::vector<Vertex> vertices;
  std::string detail;
};

struct TheoremReport {
  std::string theorem;
  std::vector<Witness> witnesses;

  bool pass() const noexcept { return witnesses.empty(); }
};

/// Checks that no vertex is farther than 2 from q, that every vertex at
/// distance 2 is pendant, and that pendant vertices outside q end a 1- or
/// 2-pendant path. Throws NotConnected / NotACovering.
TheoremReport check_distance_theorems(const Graph& g, const CoverSet& q);

/// True iff classify_noncovered_edges reports no Violation.
/// Throws NotConnected.
bool characterization_holds(const Graph& g, const CoverSet& q);

}  // namespace covenergy
