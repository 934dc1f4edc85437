#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "latgreen/lattice.hpp"
#include "latgreen/special_functions.hpp"

namespace latgreen {

// Brute-force evaluators used only to verify the series representations.

struct OracleValue {
  Complex value{};
  double err_estimate = 0.0;
  /// Grid size per dimension (quadrature) or number of panels (Laplace).
  std::int64_t work = 0;
};

/// Trapezoidal rule with N points per dimension for the defining torus
/// integral; N must be a power of two >= 2. The error estimate is |I_N - I_{N/2}|.
OracleValue quadrature_torus(int d, Complex z, const LatticePoint& n, std::int64_t n_per_dim);

inline constexpr std::int64_t kQuadratureStartN = 256;
inline constexpr std::int64_t kQuadratureMaxN = 4096;
inline constexpr std::int64_t kQuadratureMaxPoints = std::int64_t{1} << 28;

/// Doubles N from 256 until the estimate is below tol relative to the value,
/// up to 4096 per dimension and 2^28 grid points in total. Throws
/// ConvergenceError if z is too close to the spectrum for tol.
OracleValue quadrature_torus_auto(int d, Complex z, const LatticePoint& n, double tol = 1e-12);

/// Modified Bessel function I_nu(x), nu >= 0 integer, x >= 0, by its power series.
double bessel_i(std::int64_t nu, double x);

/// e^{-x} I_nu(x), summed in the log domain so that large x does not overflow.
double bessel_i_scaled(std::int64_t nu, double x);

/// G(z, n) = int_0^inf e^{-t(2d - z)} prod_j I_{n_j}(2t) dt for Re z < 0,
/// by Gauss-Kronrod on doubling panels [0, T], T growing until the tail bound
/// e^{T Re z}/|Re z| is below tol relative to the value.
OracleValue laplace_bessel(int d, Complex z, const LatticePoint& n, double tol = 1e-12);

/// Closed Laplace transform of I_nu(omega t) at s, for d = 1 with s = 2 - z, omega = 2:
/// (sqrt(s+omega) - sqrt(s-omega))^{2 nu} / ((2 omega)^nu sqrt(s-omega) sqrt(s+omega)).
Complex laplace_closed_1d(Complex z, std::int64_t nu);

/// Killed simple random walk on Z^d: dies with probability eps per step.
struct WalkConfig {
  int dim = 2;
  double eps = 0.5;
  std::int64_t kmax = 0;

  /// Bound (1 - eps)^{kmax+1} / eps on the omitted terms.
  double tail_bound() const;
  void validate() const;
  /// Smallest kmax whose tail bound is below tail_tol.
  static WalkConfig for_tolerance(int dim, double eps, double tail_tol);
};

/// P(X_k = n) = (2d)^{-k} sum_{|a| = (k-|n|)/2} k! / (a! prod_j (a_j + |n_j|)!), exactly.
Rational walk_prob_exact(int d, std::int64_t k, const LatticePoint& n);

/// P(X_k = n) in floating point from the product of binomials (d <= 2).
double walk_prob(int d, std::int64_t k, const LatticePoint& n);

struct WalkValue {
  double value = 0.0;
  double tail_bound = 0.0;
  std::int64_t terms = 0;
};

/// sum_{k=0}^{kmax} (1 - eps)^k P(X_k = n): the expected number of visits to n
/// before the walk is killed, with its certified truncation bound.
WalkValue walk_expectation(const WalkConfig& cfg, const LatticePoint& n);

/// Counterterm e(eps): (2 eps)^{-1/2} for d = 1, -(1/pi) log(4 eps) for d = 2, 0 for d >= 3.
double renormalization_counterterm(int d, double eps);

struct RenormalizedLimit {
  double limit = 0.0;
  /// E(eps, n) - e(eps) at each eps of the sequence.
  std::vector<double> samples;
  /// Least-squares residual norm of the extrapolation fit.
  double fit_residual = 0.0;
  /// |limit - last sample|, a crude indication of the remaining eps dependence.
  double spread = 0.0;
};

/// Extrapolates E(eps, n) - e(eps) to eps -> 0 from a strictly decreasing
/// sequence in (0, 1), d in {1, 2}. The fit basis is {1, eps^{1/2}, eps, eps^{3/2}}
/// for d = 1 and {1, eps log eps, eps, eps^2 log eps} for d = 2 (truncated
/// to the number of samples). A diagnostic, not a precision instrument.
RenormalizedLimit renormalized_limit(int d, const LatticePoint& n, std::span<const double> eps,
                                     double tail_tol = 1e-11);

/// Classical potential kernel a(n) = (2 pi)^{-2} int (1 - cos n.theta) / (1 - (cos theta_1 +
/// cos theta_2)/2) of the planar walk, reduced to one dimension analytically and
/// integrated by adaptive Gauss-Kronrod.
OracleValue potential_kernel_2d(const LatticePoint& n, double tol = 1e-13);

}  // namespace latgreen
