#include "doctest.h"

#include <random>

#include "covenergy/covering.hpp"
#include "covenergy/families.hpp"
#include "oracles.hpp"

using namespace covenergy;

namespace {

CoverSet cover(const Graph& g, std::vector<Vertex> members) {
  return CoverSet(g.order(), std::move(members));
}

const EdgeClassification& edge_class(
    const std::vector<EdgeClassification>& all, Vertex u, Vertex v) {
  for (const auto& c : all) {
    if (c.edge == Edge{std::min(u, v), std::max(u, v)}) return c;
  }
  throw std::runtime_error("edge not classified");
}

std::uint64_t bits(const CoverSet& q) {
  std::uint64_t m = 0;
  for (Vertex v : q.members()) m |= 1ull << v;
  return m;
}

Graph random_connected(std::mt19937_64& rng, std::size_t min_n,
                       std::size_t max_n, double p) {
  const std::size_t n = min_n + rng() % (max_n - min_n + 1);
  while (true) {
    auto g = gen_random(n, p, rng());
    if (is_connected(g)) return g;
  }
}

}  // namespace

TEST_CASE("CoverSet normalizes and validates") {
  CoverSet q(6, {5, 1, 1, 3});
  CHECK(q.members() == std::vector<Vertex>{1, 3, 5});
  CHECK(q.contains(3));
  CHECK_FALSE(q.contains(2));
  CHECK_THROWS_AS(CoverSet(3, {3}), Error);
}

TEST_CASE("is_3_covering") {
  for (std::size_t m = 2; m <= 6; ++m) {
    const auto g = gen_star_rays({m, 2});
    CHECK(is_3_covering(g, cover(g, {0})));
    CHECK(oracle::hits_all_p3(g, 1));
  }
  const auto p3 = gen_path(3);
  CHECK_FALSE(is_3_covering(p3, cover(p3, {})));
  const auto k5 = gen_complete(5);
  CHECK(is_3_covering(k5, cover(k5, {0, 1, 2, 3, 4})));
  CHECK_THROWS_AS(is_3_covering(k5, CoverSet(4, {0})), Error);
}

TEST_CASE("is_2_covering") {
  const auto k14 = gen_star_rays({4, 1});
  CHECK(is_2_covering(k14, cover(k14, {0})));
  CHECK(is_3_covering(k14, cover(k14, {0})));
  const auto edge = gen_path(2);
  CHECK_FALSE(is_2_covering(edge, cover(edge, {})));
}

TEST_CASE("min_3_covering_bruteforce") {
  CHECK(min_3_covering_bruteforce(gen_path(3)).members() ==
        std::vector<Vertex>{0});
  CHECK(min_3_covering_bruteforce(gen_star_rays({2, 2})).members() ==
        std::vector<Vertex>{0});
  CHECK(min_3_covering_bruteforce(gen_complete(3)).size() == 1);
  CHECK(min_3_covering_bruteforce(Graph(4, {})).empty());

  try {
    min_3_covering_bruteforce(gen_path(21));
    FAIL("expected SizeBoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeBoundExceeded);
  }
  CHECK(min_3_covering_bruteforce(gen_path(21), 21).size() == 7);
}

TEST_CASE("min_3_covering_exact") {
  const auto s5 = gen_star_rays({5, 2});
  CHECK(min_3_covering_exact(s5).members() == std::vector<Vertex>{0});
  CHECK(min_3_covering_exact(Graph(6, {})).empty());
  // P_n needs floor(n / 3) vertices.
  CHECK(min_3_covering_exact(gen_path(40)).size() == 13);
  CHECK(min_3_covering_exact(gen_complete(6)).size() == 4);
}

TEST_CASE("exact and brute-force minimum sizes agree with subset enumeration") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const double p = std::array{0.15, 0.3, 0.5, 0.7}[trial % 4];
    const auto g = gen_random(n, p, rng());
    const auto exact = min_3_covering_exact(g);
    const auto brute = min_3_covering_bruteforce(g);
    const auto expected = oracle::min_cover_size_by_subsets(g);
    REQUIRE(exact.size() == expected);
    REQUIRE(brute.size() == expected);
    CHECK(oracle::hits_all_p3(g, bits(exact)));
    CHECK(oracle::hits_all_p3(g, bits(brute)));
  }
}

TEST_CASE("minimum 2-coverings") {
  const auto k14 = gen_star_rays({4, 1});
  CHECK(min_2_covering_exact(k14).members() == std::vector<Vertex>{0});
  CHECK(min_2_covering_bruteforce(k14).members() == std::vector<Vertex>{0});
  CHECK(min_2_covering_exact(gen_complete(5)).size() == 4);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = gen_random(1 + rng() % 10, 0.35, rng());
    const auto a = min_2_covering_exact(g);
    CHECK(is_2_covering(g, a));
    CHECK(a.size() == min_2_covering_bruteforce(g).size());
  }
}

TEST_CASE("supersets of 3-coverings are 3-coverings") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = gen_random(2 + rng() % 10, 0.4, rng());
    auto members = min_3_covering_exact(g).members();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (rng() % 3 == 0) members.push_back(v);
      CHECK(is_3_covering(g, cover(g, members)));
    }
  }
}

TEST_CASE("classify_noncovered_edges: the three permitted kinds") {
  SUBCASE("two-ray star: tips are 2-pendant edges") {
    const auto g = gen_star_rays({2, 2});
    const auto all = classify_noncovered_edges(g, cover(g, {0}));
    CHECK(edge_class(all, 0, 1).classes == kCovered);
    CHECK(edge_class(all, 0, 2).classes == kCovered);
    CHECK(edge_class(all, 1, 3).classes == kPendant2);
    CHECK(edge_class(all, 2, 4).classes == kPendant2);
  }
  SUBCASE("w-u-v-y with both ends in Q: middle edge is a handle") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto all = classify_noncovered_edges(g, cover(g, {0, 3}));
    CHECK(edge_class(all, 1, 2).classes == kHandle);
  }
  SUBCASE("triangle with apex in Q") {
    const auto g = gen_complete(3);
    const auto all = classify_noncovered_edges(g, cover(g, {0}));
    CHECK(edge_class(all, 1, 2).classes == kTriangle);
  }
  SUBCASE("an edge can be handle and triangle at once") {
    Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    const auto q = cover(g, {2, 3});
    REQUIRE(is_3_covering(g, q));
    const auto c = edge_class(classify_noncovered_edges(g, q), 0, 1);
    CHECK(c.classes == (kHandle | kTriangle));
    CHECK(edge_class_names(c.classes) == "Handle|Triangle");
  }
}

TEST_CASE("classify_noncovered_edges: violations") {
  SUBCASE("P3 with empty Q: edges meet in one vertex") {
    const auto g = gen_path(3);
    const auto all = classify_noncovered_edges(g, cover(g, {}));
    for (const auto& c : all) {
      CHECK(c.has(kViolation));
      CHECK(c.reason.find("shares only vertex 1") != std::string::npos);
    }
    CHECK_FALSE(characterization_holds(g, cover(g, {})));
  }
  SUBCASE("uncovered edge with no Q neighbor") {
    const auto g = gen_path(5);
    const auto all = classify_noncovered_edges(g, cover(g, {0}));
    const auto& c = edge_class(all, 2, 3);
    CHECK(c.has(kViolation));
    CHECK(c.reason.find("not a 2-pendant") != std::string::npos);
  }
  SUBCASE("K2 with empty Q is a covering the edge rules reject") {
    // No P3 exists, but the lone edge has no Q vertex to hang from.
    const auto g = gen_path(2);
    CHECK(is_3_covering(g, cover(g, {})));
    CHECK_FALSE(characterization_holds(g, cover(g, {})));
  }
}

TEST_CASE("characterization_holds needs a connected graph") {
  Graph g(4, {{0, 1}, {2, 3}});
  try {
    characterization_holds(g, cover(g, {0}));
    FAIL("expected NotConnected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConnected);
  }
}

TEST_CASE("classify_vertex") {
  for (std::size_t m = 2; m <= 5; ++m) {
    const auto g = gen_star_rays({m, 2});
    const auto q = cover(g, {0});
    CHECK(classify_vertex(g, q, 0).cases ==
          std::vector<VertexCaseKind>{VertexCaseKind::InQ});
    for (Vertex i = 1; i <= m; ++i) {
      CHECK(classify_vertex(g, q, i).cases ==
            std::vector<VertexCaseKind>{VertexCaseKind::MiddleOf2PendantPath});
      CHECK(classify_vertex(g, q, m + i).cases ==
            std::vector<VertexCaseKind>{VertexCaseKind::PendantOf2Path});
    }
  }
  SUBCASE("1-pendant and V-path vertices") {
    const auto k13 = gen_star_rays({3, 1});
    CHECK(classify_vertex(k13, cover(k13, {0}), 2).has(
        VertexCaseKind::PendantOf1Path));
    Graph v(3, {{0, 1}, {1, 2}});
    CHECK(classify_vertex(v, cover(v, {0, 2}), 1).cases ==
          std::vector<VertexCaseKind>{VertexCaseKind::VPath});
  }
  SUBCASE("handle and triangle endpoints") {
    Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    const auto vc = classify_vertex(g, cover(g, {2, 3}), 0);
    CHECK(vc.has(VertexCaseKind::VPath));
    CHECK(vc.has(VertexCaseKind::HandleMiddleEndpoint));
    CHECK(vc.has(VertexCaseKind::TriangleEdgeEndpoint));
  }
  SUBCASE("invalid cover") {
    const auto g = gen_path(4);
    try {
      classify_vertex(g, cover(g, {}), 0);
      FAIL("expected NotACovering");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotACovering);
    }
  }
}

TEST_CASE("check_distance_theorems") {
  for (std::size_t m = 2; m <= 6; ++m) {
    const auto g = gen_star_rays({m, 2});
    const auto report = check_distance_theorems(g, cover(g, {0}));
    CHECK(report.pass());
    CHECK(report.witnesses.empty());
  }
  const auto p5 = gen_star_rays({2, 2});
  const auto dist = distances_to_set(p5, std::vector<Vertex>{0});
  std::vector<Vertex> at_two;
  for (Vertex v = 0; v < p5.order(); ++v)
    if (dist[v].value() == 2) at_two.push_back(v);
  CHECK(at_two == std::vector<Vertex>{3, 4});

  Graph split(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(check_distance_theorems(split, cover(split, {0, 2})), Error);
  const auto p4 = gen_path(4);
  CHECK_THROWS_AS(check_distance_theorems(p4, cover(p4, {0})), Error);
}

TEST_CASE("theorem properties on random connected graphs") {
  std::mt19937_64 rng(77);
  std::size_t valid = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const double p = std::array{0.15, 0.3, 0.5}[trial % 3];
    const auto g = random_connected(rng, 3, 10, p);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 2) members.push_back(v);
    const auto q = cover(g, members);
    const bool is_cover = oracle::hits_all_p3(g, bits(q));
    REQUIRE(is_3_covering(g, q) == is_cover);
    REQUIRE(characterization_holds(g, q) == is_cover);
    if (!is_cover) continue;
    ++valid;
    CHECK(check_distance_theorems(g, q).pass());
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK_FALSE(classify_vertex(g, q, v).cases.empty());
    }
  }
  CHECK(valid > 20);
}
