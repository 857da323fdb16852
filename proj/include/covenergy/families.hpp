#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>

#include "covenergy/graph.hpp"
#include "covenergy/spectral.hpp"

namespace covenergy {

/// Generalized star: `rays` paths of `ray_len` edges glued at vertex 0.
/// Ring k of ray i (k, i >= 1) sits at index (k - 1) * rays + i.
struct StarParams {
  std::size_t rays = 2;
  std::size_t ray_len = 1;

  std::size_t order() const noexcept { return 1 + rays * ray_len; }
};

Graph gen_star_rays(const StarParams& p);
Graph gen_path(std::size_t n);
Graph gen_complete(std::size_t n);
/// G(n, p) with a SplitMix64 stream; identical output for identical seeds on
/// every platform.
Graph gen_random(std::size_t n, double p, std::uint64_t seed);

/// Monic cubic x^3 + b x^2 + c x + d.
struct CubicCoeffs {
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

/// Three real roots, descending, by the trigonometric method.
/// Throws ComplexRoots when the discriminant is negative.
std::array<double, 3> solve_cubic_real(const CubicCoeffs& c);

/// Cardano's radicals with complex cube roots; each root carries the
/// imaginary residue the radicals leave behind. Ordered by real part,
/// descending.
std::array<std::complex<double>, 3> cardano_roots(const CubicCoeffs& c);

/// Coefficients of x^3 - x^2 - (m+1) x + 1.
CubicCoeffs star3_cubic(std::size_t m);

/// (x-1)^(m-1) (x+1)^(m-1) (x^3 - x^2 - (m+1) x + 1), expanded exactly.
CharPoly star3_char_poly(std::size_t m);

struct ClosedFormSpectrum {
  std::size_t pm_one_multiplicity = 0;
  std::array<double, 3> cubic_roots{};
  double energy = 0.0;

  /// All 2m + 1 eigenvalues, descending.
  std::vector<double> eigenvalues() const;
};

ClosedFormSpectrum star3_spectrum_closed(std::size_t m);
double star3_energy_closed(std::size_t m);

/// sqrt(4m + 1); defined for m >= 3 (InvalidParams otherwise).
double star1_energy_closed(std::size_t m);
/// The two nonzero eigenvalues (1 +- sqrt(4m + 1)) / 2, larger first.
std::array<double, 2> star1_nonzero_eigenvalues(std::size_t m);

/// The discriminant radicand of the m-star cubic, two ways.
struct RadicandReport {
  std::int64_t m = 0;
  std::int64_t delta1 = 0;  // 2b^3 - 9bc + 27d = 16 - 9m
  std::int64_t delta0 = 0;  // b^2 - 3c = 3m + 4
  std::int64_t direct_expansion = 0;    // delta1^2 - 4 delta0^3
  std::int64_t direct_closed_form = 0;  // -108m^3 - 351m^2 - 864m
  std::int64_t simplified = 0;          // 27m^3 + 189m^2 - 144m + 308
  bool agree = false;
  bool direct_negative = false;
};

RadicandReport radicand_discrepancy_report(std::size_t m);

}  // namespace covenergy
