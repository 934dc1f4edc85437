#include "latgreen/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "shell_sum.hpp"

namespace latgreen {

namespace {

void check_lower(const std::vector<HalfInt>& lower, const char* what) {
  for (const auto& b : lower) {
    if (b.is_nonpositive_integer()) {
      throw DomainError(std::string(what) + ": lower parameter " + b.str() +
                        " is a nonpositive integer");
    }
  }
}

// Index of the first vanishing factor of (q)_k, i.e. (q)_k = 0 for k > -q.
std::optional<std::int64_t> vanishing_order(HalfInt q) {
  if (q.is_nonpositive_integer()) return -q.integer_value();
  return std::nullopt;
}

using detail::kQuietShells;
using detail::min_opt;

}  // namespace

void PFQParams::validate() const { check_lower(lower, "pFq"); }

std::optional<std::int64_t> PFQParams::terminating_degree() const {
  std::optional<std::int64_t> deg;
  for (const auto& a : upper) deg = min_opt(deg, vanishing_order(a));
  return deg;
}

void LauricellaB::validate() const {
  if (a.size() != b.size() || a.empty()) {
    throw DomainError("F_B: parameter sequences must be nonempty and of equal length");
  }
  check_lower({c}, "F_B");
}

void LauricellaC::validate() const {
  if (c.empty()) throw DomainError("F_C: empty lower parameter sequence");
  check_lower(c, "F_C");
}

SeriesValue eval_pfq(const PFQParams& p, Complex w, double tol, std::int64_t max_terms) {
  p.validate();
  require_finite(w, "pFq");
  const auto degree = p.terminating_degree();
  const std::size_t np = p.upper.size();
  const std::size_t nq = p.lower.size();

  if (!degree && w != 0.0) {
    if (np > nq + 1) throw DomainError("pFq: series with p > q+1 diverges for w != 0");
    if (np == nq + 1 && std::abs(w) >= 1.0) {
      throw DomainError("pFq: |w| >= 1 outside the disk of convergence");
    }
  }

  // Extended precision for the running term and sum: alternating series with
  // large intermediate terms (|a_j| >> 1) otherwise lose digits to cancellation.
  using Wide = std::complex<long double>;
  const Wide ww(w.real(), w.imag());
  SeriesValue out;
  Wide term = 1.0L;
  Wide sum = 1.0L;
  long double magnitude = 1.0L;
  std::int64_t k = 0;
  int quiet = 0;
  const std::int64_t last = degree ? *degree : std::numeric_limits<std::int64_t>::max();
  while (k < last) {
    if (k + 1 >= max_terms) {
      throw ConvergenceError("pFq: max_terms exhausted", static_cast<double>(std::abs(term)));
    }
    const auto kd = static_cast<long double>(k);
    Wide ratio = ww / (kd + 1.0L);
    for (const auto& a : p.upper) ratio *= static_cast<long double>(a.to_double()) + kd;
    for (const auto& b : p.lower) ratio /= static_cast<long double>(b.to_double()) + kd;
    term *= ratio;
    sum += term;
    magnitude += std::abs(term);
    ++k;
    if (!degree) {
      quiet = (std::abs(term) <= tol * std::abs(sum)) ? quiet + 1 : 0;
      if (quiet >= kQuietShells) break;
    }
  }
  out.value = Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
  out.terms_used = k + 1;
  out.err_estimate = degree ? 0.0 : static_cast<double>(std::abs(term));
  out.magnitude = static_cast<double>(magnitude);
  out.converged = true;
  return out;
}

Rational eval_pfq_exact(const PFQParams& p, const Rational& w) {
  p.validate();
  const auto degree = p.terminating_degree();
  if (!degree) throw DomainError("eval_pfq_exact: series does not terminate");
  Rational term = 1;
  Rational sum = 1;
  for (std::int64_t k = 0; k < *degree; ++k) {
    Rational ratio = w / Rational(k + 1);
    for (const auto& a : p.upper) ratio *= a.to_rational() + k;
    for (const auto& b : p.lower) ratio /= b.to_rational() + k;
    term *= ratio;
    sum += term;
  }
  return sum;
}

SeriesValue eval_lauricella_fb(const LauricellaB& p, std::span<const Complex> w, double tol,
                               std::int64_t max_total_degree) {
  p.validate();
  const std::size_t d = p.dim();
  if (w.size() != d) throw DomainError("F_B: argument count does not match dimension");

  std::vector<detail::ShellSum::Ratio> ratios;
  std::vector<std::optional<std::int64_t>> bounds;
  bool terminating = true;
  for (std::size_t j = 0; j < d; ++j) {
    require_finite(w[j], "F_B");
    auto bound = min_opt(vanishing_order(p.a[j]), vanishing_order(p.b[j]));
    if (w[j] == 0.0) bound = 0;
    if (!bound) terminating = false;
    bounds.push_back(bound);
    const double aj = p.a[j].to_double();
    const double bj = p.b[j].to_double();
    const Complex wj = w[j];
    ratios.emplace_back([aj, bj, wj](std::int64_t k) {
      const double kd = static_cast<double>(k);
      return wj * ((aj + kd) * (bj + kd) / (kd + 1.0));
    });
  }
  if (!terminating) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!bounds[j] && std::abs(w[j]) >= 1.0) {
        throw DomainError("F_B: |w_j| >= 1 outside the domain of convergence");
      }
    }
  }
  const double c = p.c.to_double();
  detail::ShellSum series(std::move(ratios), std::move(bounds),
                  [c](std::int64_t k) { return Complex(1.0 / (c + static_cast<double>(k))); },
                  std::nullopt);
  return detail::run_shells(series, tol, max_total_degree, "F_B");
}

SeriesValue eval_lauricella_fc(const LauricellaC& p, std::span<const Complex> w, double tol,
                               std::int64_t max_total_degree) {
  p.validate();
  const std::size_t d = p.dim();
  if (w.size() != d) throw DomainError("F_C: argument count does not match dimension");

  const auto shell_bound = min_opt(vanishing_order(p.a), vanishing_order(p.b));
  std::vector<detail::ShellSum::Ratio> ratios;
  std::vector<std::optional<std::int64_t>> bounds;
  double root_sum = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    require_finite(w[j], "F_C");
    root_sum += std::sqrt(std::abs(w[j]));
    bounds.push_back(w[j] == 0.0 ? std::optional<std::int64_t>(0) : std::nullopt);
    const double cj = p.c[j].to_double();
    const Complex wj = w[j];
    ratios.emplace_back([cj, wj](std::int64_t k) {
      const double kd = static_cast<double>(k);
      return wj / ((cj + kd) * (kd + 1.0));
    });
  }
  if (!shell_bound && root_sum >= 1.0) {
    throw DomainError("F_C: sum of sqrt|w_j| >= 1 outside the domain of convergence");
  }
  const double a = p.a.to_double();
  const double b = p.b.to_double();
  detail::ShellSum series(std::move(ratios), std::move(bounds),
                  [a, b](std::int64_t k) {
                    const double kd = static_cast<double>(k);
                    return Complex((a + kd) * (b + kd));
                  },
                  shell_bound);
  return detail::run_shells(series, tol, max_total_degree, "F_C");
}

}  // namespace latgreen
