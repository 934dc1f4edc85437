#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "latgreen/hypergeometric.hpp"
#include "latgreen/lattice.hpp"

namespace latgreen {

// Every function here evaluates the resolvent kernel
//
//   G(z, n) = (2 pi)^{-d} int_{T^d} e^{i n.theta} / (2d - 2 cos theta_1 - ... - z) dtheta
//
// of the discrete Laplacian on Z^d through one representation, and throws
// RegionError when z lies outside that representation's validity region.

/// Laurent expansion in (2d - z)^{-1}, valid for |2d - z| > 2d, any d.
/// Sums (2|a|+|n|)! / (a! prod_j (a_j+|n_j|)!) (2d-z)^{-2|a|-|n|-1} by shells |a| = s.
GreenValue green_laurent(int d, Complex z, const LatticePoint& n, double tol = kDefaultTol);

/// Laurent expansion collapsed to a single sum for d = 2, valid for |4 - z| > 4.
GreenValue green_laurent_2d(Complex z, const LatticePoint& n, double tol = kDefaultTol);

/// Closed form for d = 1 on C \ [0,4]: ((2 - z - S)/2)^{|n|} / S with S = resolvent_sqrt_1d(z).
GreenValue green_1d(Complex z, std::int64_t n);

/// d = 1 expansion at the threshold 0, for z off [0, inf) with |z| < 4.
GreenValue green_1d_threshold0(Complex z, std::int64_t n, double tol = kDefaultTol);

/// d = 1 expansion at the threshold 4, for z off (-inf, 4] with |z - 4| < 4.
GreenValue green_1d_threshold4(Complex z, std::int64_t n, double tol = kDefaultTol);

/// d = 2 expansion at the embedded threshold 4, for |z - 4| < 4 and Im z != 0.
/// Values with Im z < 0 come from G(conj z, n) = conj G(z, n).
GreenValue green_2d_embedded(Complex z, const LatticePoint& n, double tol = kDefaultTol);

/// Boundary limit at z = 4 of the embedded expansion with the log(-(z-4)^2/16)
/// term removed, i.e. the regular part E_1(4, n). Floating counterpart of
/// fundsol_embedded().
GreenValue green_2d_embedded_boundary(const LatticePoint& n);

enum class DiagForm {
  automatic,  ///< whichever representation covers z
  threshold4, ///< series in ((z-4)/4)^2 with log(-(z-4)^2/16); |z-4| < 4
  endpoint,   ///< series in z(8-z)/16 with log(z(z-8)/16); |z(8-z)| < 16, Re z != 4
};

/// Diagonal value P0(m) = (-1)^m G(z, (m, m)) for d = 2.
Complex diag_p0(Complex z, std::int64_t m, DiagForm form = DiagForm::automatic,
                double tol = kDefaultTol);

/// P0(0), ..., P0(max_m) from a single representation.
std::vector<Complex> diag_p0_values(Complex z, std::int64_t max_m,
                                    DiagForm form = DiagForm::automatic, double tol = kDefaultTol);

/// Rotated coordinates for d = 2:
///   P(m, l) = (-1)^{m+l} G(z, m+l, m-l),  Q(m, l) = (-1)^{m+l} G(z, m+l+1, m-l).
/// endpoint_P / endpoint_Q evaluate the finite 4F3 solution of the diagonal
/// recurrence for (m, l) in N_0^2; p0 must hold P0(0..max(m, l)).
Complex endpoint_P(Complex z, std::int64_t m, std::int64_t l, std::span<const Complex> p0);
Complex endpoint_Q(Complex z, std::int64_t m, std::int64_t l, std::span<const Complex> p0);

/// Table of P and Q on [0, max_m] x [0, max_l] built by the explicit
/// recursion obtained from double sums of the Helmholtz equation.
class RotatedRecurrence {
 public:
  /// p0 must hold P0(0..max(max_m, max_l)).
  RotatedRecurrence(Complex z, std::span<const Complex> p0, std::int64_t max_m, std::int64_t max_l);

  /// Accepts any sign; P(m, l) = P(|m|, |l|).
  Complex P(std::int64_t m, std::int64_t l) const;
  /// (m, l) in N_0^2.
  Complex Q(std::int64_t m, std::int64_t l) const;

 private:
  std::int64_t max_m_;
  std::int64_t max_l_;
  std::vector<Complex> p_;
  std::vector<Complex> q_;
};

/// d = 2 kernel from the endpoint-threshold 4F3 formulas, any z off [0, 8]
/// for which the diagonal values are available. err_estimate includes the
/// rounding amplified by cancellation among the finite sums.
GreenValue green_2d_endpoint(Complex z, const LatticePoint& n, double tol = kDefaultTol);

/// d = 2 kernel from the rotated-coordinate recursion.
GreenValue green_2d_recurrence(Complex z, const LatticePoint& n, double tol = kDefaultTol);

/// sum_{j=p}^{q} (j + r)_k = [(q + r)_{k+1} - (p + r - 1)_{k+1}] / (k + 1), exactly.
Rational pochhammer_telescoping(std::int64_t p, std::int64_t q, HalfInt r, std::int64_t k);

/// Region-aware dispatcher. d = 1: closed form. d = 2: Laurent when it
/// converges fast, then the embedded expansion, then the endpoint formulas,
/// then Laurent at any rate. d >= 3: Laurent only.
GreenValue green_auto(int d, Complex z, const LatticePoint& n, double tol = kDefaultTol);

/// Evaluates through a named series representation (not the oracles).
GreenValue green_with(Representation rep, int d, Complex z, const LatticePoint& n,
                      double tol = kDefaultTol);

/// Series representations (no oracles) whose validity region contains z and
/// which are well conditioned there. The endpoint and recurrence paths are
/// listed only for |z(8 - z)| < 16 or |z - 4| < 4, although green_with()
/// evaluates them anywhere off [0, 8] (with a correspondingly larger
/// err_estimate).
std::vector<Representation> applicable_representations(int d, Complex z);

using KernelFn = std::function<Complex(const LatticePoint&)>;

/// (2d - z) G(n) - sum_j [G(n + e_j) + G(n - e_j)], which equals delta_0[n].
Complex helmholtz_residual(const KernelFn& g, Complex z, const LatticePoint& n);

}  // namespace latgreen
