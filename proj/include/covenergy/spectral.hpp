#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "covenergy/covering.hpp"
#include "covenergy/graph.hpp"

namespace covenergy {

using BigInt = boost::multiprecision::cpp_int;

/// Dense symmetric matrix: adjacency plus unit diagonal on cover vertices.
class CoveringMatrix {
 public:
  explicit CoveringMatrix(std::size_t n = 0) : n_(n), entries_(n * n, 0.0) {}

  std::size_t dim() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * n_ + j];
  }
  const std::vector<double>& data() const noexcept { return entries_; }

  double trace() const;
  double frobenius_squared() const;
  bool is_symmetric() const;

  friend bool operator==(const CoveringMatrix&, const CoveringMatrix&) =
      default;

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

inline constexpr double kClusterTolerance = 1e-7;
inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

struct Cluster {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

struct Spectrum {
  /// Descending.
  std::vector<double> eigenvalues;
  std::vector<Cluster> clusters;

  double sum() const;
  double abs_sum() const;
};

/// Groups descending eigenvalues whose consecutive gap is within `tol`.
std::vector<Cluster> cluster_eigenvalues(const std::vector<double>& descending,
                                         double tol = kClusterTolerance);

/// Monic integer polynomial; coefficients run from the leading term down to
/// the constant term.
struct CharPoly {
  std::vector<BigInt> coefficients;

  std::size_t degree() const { return coefficients.size() - 1; }
  /// Horner evaluation in long double.
  long double evaluate(long double x) const;
  /// Sum of |c_k| max(1, |x|)^k, the scale for judging a residual at x.
  /// Clamping at 1 keeps the scale meaningful at a repeated root of 0.
  long double magnitude(long double x) const;
  /// e.g. "x^5 - x^4 - 4x^3 + 2x^2 + 3x - 1".
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Product of two coefficient lists (highest degree first).
CharPoly multiply(const CharPoly& a, const CharPoly& b);
/// (x - root)^power as a CharPoly.
CharPoly linear_power(long root, std::size_t power);

CoveringMatrix build_covering_matrix(const Graph& g, const CoverSet& q);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// kJacobiTolerance (relative to the matrix norm when that exceeds 1).
/// Throws ConvergenceFailure after kJacobiMaxSweeps sweeps.
Spectrum eigenvalues_symmetric(const CoveringMatrix& m);

/// Exact det(xI - M) via the division-free Berkowitz recurrence.
/// Throws NonIntegerMatrix when any entry is not an integer.
CharPoly char_poly(const CoveringMatrix& m);

enum class EnergyMethod { Numeric, ClosedForm };
std::string_view to_string(EnergyMethod method);

struct EnergyReport {
  CoverSet cover;
  Spectrum spectrum;
  double energy = 0.0;
  EnergyMethod method = EnergyMethod::Numeric;
};

EnergyReport covering_energy(const Graph& g, const CoverSet& q);

}  // namespace covenergy
