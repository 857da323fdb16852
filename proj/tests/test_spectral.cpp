#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "covenergy/families.hpp"
#include "covenergy/spectral.hpp"
#include "oracles.hpp"

using namespace covenergy;

namespace {

// Bisection on lambda^5 - lambda^4 - 4 lambda^3 + 2 lambda^2 + 3 lambda - 1,
// run once in 30-digit arithmetic and frozen here.
constexpr double kStar2Roots[] = {2.1700864866260337, 1.0, 0.31110781746598190,
                                  -1.0, -1.4811943040920156};
constexpr double kStar2Energy = 5.9623886081840312;

CoveringMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  CoveringMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<long> ints(const CharPoly& p) {
  std::vector<long> out;
  for (const auto& c : p.coefficients) out.push_back(c.convert_to<long>());
  return out;
}

std::vector<std::vector<std::int64_t>> int_rows(const CoveringMatrix& m) {
  std::vector<std::vector<std::int64_t>> rows(m.dim(),
                                              std::vector<std::int64_t>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      rows[i][j] = static_cast<std::int64_t>(m(i, j));
  return rows;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), edges);
}

}  // namespace

TEST_CASE("build_covering_matrix reproduces the printed two-ray matrix") {
  const auto g = gen_star_rays({2, 2});
  const auto m = build_covering_matrix(g, CoverSet(5, {0}));
  const auto expected = from_rows({{1, 1, 1, 0, 0},
                                   {1, 0, 0, 1, 0},
                                   {1, 0, 0, 0, 1},
                                   {0, 1, 0, 0, 0},
                                   {0, 0, 1, 0, 0}});
  CHECK(m == expected);
  CHECK(m.is_symmetric());
}

TEST_CASE("build_covering_matrix edge cases") {
  const auto p4 = gen_path(4);
  const auto plain = build_covering_matrix(p4, CoverSet(4, {}));
  CHECK(plain.trace() == 0.0);
  CHECK(plain.frobenius_squared() == 6.0);
  const auto single = build_covering_matrix(Graph(1, {}), CoverSet(1, {0}));
  CHECK(single == from_rows({{1}}));
}

TEST_CASE("eigenvalues_symmetric") {
  const auto two = eigenvalues_symmetric(from_rows({{0, 1}, {1, 0}}));
  REQUIRE(two.eigenvalues.size() == 2);
  CHECK(two.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(two.eigenvalues[1] == doctest::Approx(-1.0));
  CHECK(eigenvalues_symmetric(from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}))
            .eigenvalues == std::vector<double>{1.0, 0.0, 0.0});
  CHECK(eigenvalues_symmetric(CoveringMatrix(0)).eigenvalues.empty());

  const auto g = gen_star_rays({2, 2});
  const auto s = eigenvalues_symmetric(build_covering_matrix(g, CoverSet(5, {0})));
  REQUIRE(s.eigenvalues.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(s.eigenvalues[i] == doctest::Approx(kStar2Roots[i]).epsilon(1e-12));
  }
}

TEST_CASE("the frozen two-ray roots agree with a fresh bisection") {
  const oracle::Poly p{-1, 3, 2, -4, -1, 1};
  const auto roots = oracle::bisection_roots(p, -3.0L, 3.0L);
  REQUIRE(roots.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(static_cast<double>(roots[i]) ==
          doctest::Approx(kStar2Roots[i]).epsilon(1e-12));
  }
}

TEST_CASE("char_poly") {
  const auto g = gen_star_rays({2, 2});
  const auto p = char_poly(build_covering_matrix(g, CoverSet(5, {0})));
  CHECK(ints(p) == std::vector<long>{1, -1, -4, 2, 3, -1});
  CHECK(p.to_string() == "x^5 - x^4 - 4x^3 + 2x^2 + 3x - 1");
  CHECK(ints(char_poly(CoveringMatrix(1))) == std::vector<long>{1, 0});
  CHECK(ints(char_poly(CoveringMatrix(0))) == std::vector<long>{1});

  CoveringMatrix frac(1);
  frac(0, 0) = 0.5;
  CHECK_THROWS_AS(char_poly(frac), Error);
}

TEST_CASE("char_poly agrees with cofactor expansion on random matrices") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const auto g = gen_random(n, 0.5, rng());
    std::vector<Vertex> q;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) q.push_back(v);
    const auto m = build_covering_matrix(g, CoverSet(n, q));
    const auto expected = oracle::char_poly_laplace(int_rows(m));
    auto got = ints(char_poly(m));
    std::reverse(got.begin(), got.end());
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
  }
}

TEST_CASE("spectral identities on random covering matrices") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 25;
    const auto g = gen_random(n, 0.3, rng());
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 3 == 0) members.push_back(v);
    const CoverSet q(n, members);
    const auto m = build_covering_matrix(g, q);
    const auto s = eigenvalues_symmetric(m);
    REQUIRE(s.eigenvalues.size() == n);
    CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end(),
                         std::greater<>()));

    CHECK(s.sum() == doctest::Approx(static_cast<double>(q.size())).epsilon(1e-9));
    const double squares = std::inner_product(
        s.eigenvalues.begin(), s.eigenvalues.end(), s.eigenvalues.begin(), 0.0);
    CHECK(squares == doctest::Approx(2.0 * g.size() + q.size()).epsilon(1e-9));

    const auto p = char_poly(m);
    CHECK(p.coefficients.front() == 1);
    if (n >= 1) CHECK(p.coefficients[1] == -BigInt(q.size()));
    for (double l : s.eigenvalues) {
      const long double residual = std::fabs(p.evaluate(l)) / p.magnitude(l);
      CHECK(residual < 1e-6L);
    }

    const auto report = covering_energy(g, q);
    CHECK(report.energy >= std::abs(s.sum()) - 1e-9);
    CHECK(report.energy == doctest::Approx(s.abs_sum()));

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vertex> moved;
    for (Vertex v : members) moved.push_back(perm[v]);
    const auto shuffled = covering_energy(relabel(g, perm), CoverSet(n, moved));
    CHECK(shuffled.energy == doctest::Approx(report.energy).epsilon(1e-9));
  }
}

TEST_CASE("covering_energy") {
  const auto k12 = gen_star_rays({2, 1});
  CHECK(covering_energy(k12, CoverSet(3, {0})).energy ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(covering_energy(Graph(1, {}), CoverSet(1, {})).energy == 0.0);
  const auto s2 = gen_star_rays({2, 2});
  const auto report = covering_energy(s2, CoverSet(5, {0}));
  CHECK(report.energy == doctest::Approx(kStar2Energy).epsilon(1e-12));
  CHECK(report.method == EnergyMethod::Numeric);
}

TEST_CASE("clusters at +1 and -1 carry multiplicity m - 1") {
  for (std::size_t m = 2; m <= 12; ++m) {
    const auto g = gen_star_rays({m, 2});
    const auto s = eigenvalues_symmetric(build_covering_matrix(g, CoverSet(g.order(), {0})));
    std::size_t plus = 0, minus = 0;
    for (const auto& c : s.clusters) {
      if (std::abs(c.value - 1.0) < 1e-7) plus = c.multiplicity;
      if (std::abs(c.value + 1.0) < 1e-7) minus = c.multiplicity;
    }
    CHECK(plus == m - 1);
    CHECK(minus == m - 1);
  }
  const auto c = cluster_eigenvalues({2.0, 1.0 + 1e-9, 1.0, 0.5});
  REQUIRE(c.size() == 3);
  CHECK(c[1].multiplicity == 2);
}
