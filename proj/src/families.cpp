#include "covenergy/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "rng.hpp"

namespace covenergy {

namespace {

void require_star_m(std::size_t m) {
  if (m < 2) {
    throw Error(ErrorCode::InvalidParams,
                "star needs m >= 2 rays, got " + std::to_string(m));
  }
}

}  // namespace

Graph gen_star_rays(const StarParams& p) {
  if (p.rays < 2 || p.ray_len < 1) {
    throw Error(ErrorCode::InvalidParams,
                "star needs rays >= 2 and ray_len >= 1, got rays=" +
                    std::to_string(p.rays) +
                    " ray_len=" + std::to_string(p.ray_len));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(p.rays * p.ray_len);
  for (std::size_t i = 1; i <= p.rays; ++i) {
    edges.emplace_back(0, i);
    for (std::size_t k = 2; k <= p.ray_len; ++k) {
      edges.emplace_back((k - 2) * p.rays + i, (k - 1) * p.rays + i);
    }
  }
  return Graph(p.order(), edges);
}

Graph gen_path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return Graph(n, edges);
}

Graph gen_complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::InvalidParams,
                "edge probability must lie in [0, 1]");
  }
  std::uint64_t state = seed;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (detail::uniform01(state) < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::array<double, 3> solve_cubic_real(const CubicCoeffs& cf) {
  const double b = cf.b, c = cf.c, d = cf.d;
  // Depressed cubic t^3 + p t + q with x = t - b/3.
  const double shift = b / 3.0;
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const double disc = -(4.0 * p * p * p + 27.0 * q * q);
  const double scale =
      std::max({1.0, std::abs(4.0 * p * p * p), 27.0 * q * q});
  if (disc < -1e-12 * scale) {
    throw Error(ErrorCode::ComplexRoots,
                "cubic discriminant " + std::to_string(disc) + " < 0");
  }

  std::array<double, 3> roots{};
  if (p >= 0.0) {
    // Only reachable with p = q = 0 up to rounding: a triple root.
    roots.fill(-shift);
    return roots;
  }
  const double r = 2.0 * std::sqrt(-p / 3.0);
  const double arg =
      std::clamp(3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p), -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  for (int k = 0; k < 3; ++k) {
    roots[k] = r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - shift;
  }
  // Newton polish; the trigonometric form loses a few ulps near clustered
  // roots.
  for (double& x : roots) {
    for (int it = 0; it < 2; ++it) {
      const double f = ((x + b) * x + c) * x + d;
      const double df = (3.0 * x + 2.0 * b) * x + c;
      if (std::abs(df) < 1e-8) break;
      x -= f / df;
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

std::array<std::complex<double>, 3> cardano_roots(const CubicCoeffs& cf) {
  using cplx = std::complex<double>;
  const double b = cf.b, c = cf.c, d = cf.d;
  const double delta0 = b * b - 3.0 * c;
  const double delta1 = 2.0 * b * b * b - 9.0 * b * c + 27.0 * d;
  const cplx radical = std::sqrt(cplx(delta1 * delta1 - 4.0 * delta0 * delta0 *
                                          delta0,
                                      0.0));
  cplx c_plus = std::pow((delta1 + radical) / 2.0, 1.0 / 3.0);
  cplx c_minus;
  if (std::abs(c_plus) < 1e-300) {
    c_minus = std::pow((delta1 - radical) / 2.0, 1.0 / 3.0);
  } else {
    // Pairs the cube roots so that c_plus * c_minus = delta0.
    c_minus = delta0 / c_plus;
  }
  const cplx xi(-0.5, std::sqrt(3.0) / 2.0);
  std::array<cplx, 3> roots;
  cplx xi_k(1.0, 0.0);
  for (int k = 0; k < 3; ++k) {
    roots[k] = -(b + xi_k * c_plus + std::conj(xi_k) * c_minus) / 3.0;
    xi_k *= xi;
  }
  std::sort(roots.begin(), roots.end(), [](const cplx& x, const cplx& y) {
    return x.real() > y.real();
  });
  return roots;
}

CubicCoeffs star3_cubic(std::size_t m) {
  require_star_m(m);
  return CubicCoeffs{-1.0, -(static_cast<double>(m) + 1.0), 1.0};
}

CharPoly star3_char_poly(std::size_t m) {
  require_star_m(m);
  const CharPoly cubic{{BigInt(1), BigInt(-1),
                        -BigInt(static_cast<long long>(m) + 1), BigInt(1)}};
  return multiply(multiply(linear_power(1, m - 1), linear_power(-1, m - 1)),
                  cubic);
}

std::vector<double> ClosedFormSpectrum::eigenvalues() const {
  std::vector<double> out(cubic_roots.begin(), cubic_roots.end());
  out.insert(out.end(), pm_one_multiplicity, 1.0);
  out.insert(out.end(), pm_one_multiplicity, -1.0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ClosedFormSpectrum star3_spectrum_closed(std::size_t m) {
  require_star_m(m);
  ClosedFormSpectrum s;
  s.pm_one_multiplicity = m - 1;
  s.cubic_roots = solve_cubic_real(star3_cubic(m));
  s.energy = 2.0 * static_cast<double>(m - 1);
  for (double x : s.cubic_roots) s.energy += std::abs(x);
  return s;
}

double star3_energy_closed(std::size_t m) {
  return star3_spectrum_closed(m).energy;
}

double star1_energy_closed(std::size_t m) {
  if (m < 3) {
    throw Error(ErrorCode::InvalidParams,
                "K_{1,m} closed form needs m >= 3; use covering_energy");
  }
  return std::sqrt(4.0 * static_cast<double>(m) + 1.0);
}

std::array<double, 2> star1_nonzero_eigenvalues(std::size_t m) {
  const double root = star1_energy_closed(m);
  return {(1.0 + root) / 2.0, (1.0 - root) / 2.0};
}

RadicandReport radicand_discrepancy_report(std::size_t m) {
  require_star_m(m);
  if (m > 100000) {
    throw Error(ErrorCode::InvalidParams,
                "m too large for 64-bit radicand arithmetic");
  }
  RadicandReport r;
  const std::int64_t mm = static_cast<std::int64_t>(m);
  r.m = mm;
  // b = -1, c = -(m + 1), d = 1.
  const std::int64_t b = -1, c = -(mm + 1), d = 1;
  r.delta1 = 2 * b * b * b - 9 * b * c + 27 * d;
  r.delta0 = b * b - 3 * c;
  r.direct_expansion = r.delta1 * r.delta1 - 4 * r.delta0 * r.delta0 * r.delta0;
  r.direct_closed_form = -108 * mm * mm * mm - 351 * mm * mm - 864 * mm;
  r.simplified = 27 * mm * mm * mm + 189 * mm * mm - 144 * mm + 308;
  r.agree = r.direct_expansion == r.simplified;
  r.direct_negative = r.direct_expansion < 0;
  return r;
}

}  // namespace covenergy
