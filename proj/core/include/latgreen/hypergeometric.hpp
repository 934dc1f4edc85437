#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "latgreen/special_functions.hpp"

namespace latgreen {

/// Parameters of a generalized hypergeometric series pFq.
struct PFQParams {
  std::vector<HalfInt> upper;
  std::vector<HalfInt> lower;

  /// Throws DomainError if a lower parameter is a nonpositive integer.
  void validate() const;
  /// The series terminates iff an upper parameter is a nonpositive integer;
  /// returns the degree (index of the last possibly nonzero term) in that case.
  std::optional<std::int64_t> terminating_degree() const;
};

/// Appell-Lauricella F_B^{(d)}(a_1..a_d; b_1..b_d; c; w_1..w_d).
struct LauricellaB {
  std::vector<HalfInt> a;
  std::vector<HalfInt> b;
  HalfInt c;

  std::size_t dim() const { return a.size(); }
  void validate() const;
};

/// Appell-Lauricella F_C^{(d)}(a, b; c_1..c_d; w_1..w_d).
struct LauricellaC {
  HalfInt a;
  HalfInt b;
  std::vector<HalfInt> c;

  std::size_t dim() const { return c.size(); }
  void validate() const;
};

struct SeriesValue {
  Complex value{};
  std::int64_t terms_used = 0;
  /// Magnitude of the last included term (or degree shell).
  double err_estimate = 0.0;
  /// Sum of |term| over the included terms (pFq only); rounding in the sum is
  /// bounded by a small multiple of machine epsilon times this.
  double magnitude = 0.0;
  bool converged = false;
};

inline constexpr double kDefaultTol = 1e-12;

/// Sums pFq(upper; lower; w) with the term-ratio recurrence.
///
/// Terminating series are summed exactly to their degree for any w. Otherwise
/// |w| < 1 is required when p = q + 1 and w = 0 when p > q + 1, and the sum
/// stops after three consecutive terms below tol relative to the partial sum.
/// Throws DomainError for invalid parameters or divergent arguments and
/// ConvergenceError if max_terms is exhausted.
SeriesValue eval_pfq(const PFQParams& p, Complex w, double tol = kDefaultTol,
                     std::int64_t max_terms = 100000);

/// Exact value of a terminating pFq at a rational argument.
/// Throws DomainError if the series does not terminate.
Rational eval_pfq_exact(const PFQParams& p, const Rational& w);

/// Multi-index series for F_B, summed by total-degree shells |alpha| = s.
/// Requires |w_j| < 1 unless the series terminates in every index.
SeriesValue eval_lauricella_fb(const LauricellaB& p, std::span<const Complex> w,
                               double tol = kDefaultTol, std::int64_t max_total_degree = 4000);

/// Multi-index series for F_C, summed by total-degree shells.
/// Requires sum_j sqrt|w_j| < 1 unless a or b is a nonpositive integer.
SeriesValue eval_lauricella_fc(const LauricellaC& p, std::span<const Complex> w,
                               double tol = kDefaultTol, std::int64_t max_total_degree = 4000);

}  // namespace latgreen
