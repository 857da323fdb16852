#include "covenergy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace covenergy {

double CoveringMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double CoveringMatrix::frobenius_squared() const {
  return std::inner_product(entries_.begin(), entries_.end(), entries_.begin(),
                            0.0);
}

bool CoveringMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

double Spectrum::sum() const {
  return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
}

double Spectrum::abs_sum() const {
  double s = 0.0;
  for (double l : eigenvalues) s += std::abs(l);
  return s;
}

std::vector<Cluster> cluster_eigenvalues(const std::vector<double>& descending,
                                         double tol) {
  std::vector<Cluster> out;
  double run_sum = 0.0;
  double prev = 0.0;
  for (double l : descending) {
    if (!out.empty() && std::abs(prev - l) <= tol) {
      auto& c = out.back();
      ++c.multiplicity;
      run_sum += l;
      c.value = run_sum / static_cast<double>(c.multiplicity);
    } else {
      out.push_back(Cluster{l, 1});
      run_sum = l;
    }
    prev = l;
  }
  return out;
}

long double CharPoly::evaluate(long double x) const {
  long double acc = 0.0L;
  for (const auto& c : coefficients) {
    acc = acc * x + c.convert_to<long double>();
  }
  return acc;
}

long double CharPoly::magnitude(long double x) const {
  long double acc = 0.0L;
  const long double ax = std::max(1.0L, std::fabs(x));
  for (const auto& c : coefficients) {
    acc = acc * ax + boost::multiprecision::abs(c).convert_to<long double>();
  }
  return acc;
}

std::string CharPoly::to_string(const std::string& var) const {
  std::ostringstream os;
  const std::size_t deg = degree();
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const BigInt& c = coefficients[i];
    if (c == 0) continue;
    const std::size_t power = deg - i;
    const BigInt mag = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || power == 0) os << mag;
    if (power >= 1) os << var;
    if (power >= 2) os << "^" << power;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CharPoly multiply(const CharPoly& a, const CharPoly& b) {
  CharPoly out;
  out.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1,
                          BigInt(0));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
      out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
    }
  }
  return out;
}

CharPoly linear_power(long root, std::size_t power) {
  CharPoly out{{BigInt(1)}};
  const CharPoly factor{{BigInt(1), BigInt(-root)}};
  for (std::size_t i = 0; i < power; ++i) out = multiply(out, factor);
  return out;
}

CoveringMatrix build_covering_matrix(const Graph& g, const CoverSet& q) {
  if (q.graph_order() != g.order()) {
    throw Error(ErrorCode::InvalidParams, "cover and graph orders differ");
  }
  CoveringMatrix m(g.order());
  for (const auto& e : g.edges()) {
    m(e.u, e.v) = 1.0;
    m(e.v, e.u) = 1.0;
  }
  for (Vertex v : q.members()) m(v, v) = 1.0;
  return m;
}

Spectrum eigenvalues_symmetric(const CoveringMatrix& input) {
  const std::size_t n = input.dim();
  std::vector<double> a = input.data();
  auto at = [&](std::size_t i, std::size_t j) -> double& {
    return a[i * n + j];
  };
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += at(i, j) * at(i, j);
      }
    }
    return std::sqrt(s);
  };
  const double scale = std::max(1.0, std::sqrt(input.frobenius_squared()));
  const double threshold = kJacobiTolerance * scale;

  int sweep = 0;
  while (off_norm() >= threshold) {
    if (sweep++ == kJacobiMaxSweeps) {
      throw Error(ErrorCode::ConvergenceFailure,
                  "Jacobi did not converge in " +
                      std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Rotation angle that annihilates a(p,q).
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }

  Spectrum out;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = at(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            std::greater<>());
  out.clusters = cluster_eigenvalues(out.eigenvalues);
  return out;
}

CharPoly char_poly(const CoveringMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<long long> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const double v = m.data()[i];
    if (v != std::trunc(v) || std::abs(v) > 1e15) {
      throw Error(ErrorCode::NonIntegerMatrix,
                  "entry " + std::to_string(v) + " is not an integer");
    }
    a[i] = static_cast<long long>(v);
  }
  auto at = [&](std::size_t i, std::size_t j) { return a[i * n + j]; };

  // p holds det(xI - A_k) for the leading k x k block, highest power first.
  std::vector<BigInt> p{BigInt(1)};
  for (std::size_t k = 0; k < n; ++k) {
    // Toeplitz column: 1, -a_kk, -R C, -R M C, ..., -R M^{k-1} C, where M is
    // the leading k x k block, R = A[k][0..k), C = A[0..k)[k].
    std::vector<BigInt> toeplitz(k + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -at(k, k);
    std::vector<BigInt> col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = at(i, k);
    for (std::size_t power = 0; power < k; ++power) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < k; ++i) dot += at(k, i) * col[i];
      toeplitz[power + 2] = -dot;
      std::vector<BigInt> next(k, BigInt(0));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (at(i, j) != 0) next[i] += at(i, j) * col[j];
        }
      }
      col = std::move(next);
    }
    std::vector<BigInt> next_p(k + 2, BigInt(0));
    for (std::size_t row = 0; row < k + 2; ++row) {
      for (std::size_t j = 0; j <= std::min(row, k); ++j) {
        next_p[row] += toeplitz[row - j] * p[j];
      }
    }
    p = std::move(next_p);
  }
  return CharPoly{std::move(p)};
}

std::string_view to_string(EnergyMethod method) {
  return method == EnergyMethod::Numeric ? "numeric" : "closed-form";
}

EnergyReport covering_energy(const Graph& g, const CoverSet& q) {
  EnergyReport report;
  report.cover = q;
  report.spectrum = eigenvalues_symmetric(build_covering_matrix(g, q));
  report.energy = report.spectrum.abs_sum();
  report.method = EnergyMethod::Numeric;
  return report;
}

}  // namespace covenergy
