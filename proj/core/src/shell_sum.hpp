#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latgreen/hypergeometric.hpp"
#include "scaled.hpp"

namespace latgreen::detail {

inline std::optional<std::int64_t> min_opt(std::optional<std::int64_t> a,
                                           std::optional<std::int64_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

inline constexpr int kQuietShells = 3;

// Multi-index series sum_alpha g(|alpha|) prod_j f_j(alpha_j), accumulated by
// total-degree shells. The factor sequences are generated from their
// successive ratios, so nothing is recomputed from scratch.
class ShellSum {
 public:
  using Ratio = std::function<Complex(std::int64_t)>;  // factor(k+1)/factor(k)

  ShellSum(std::vector<Ratio> coord_ratio, std::vector<std::optional<std::int64_t>> coord_bound,
           Ratio shell_ratio, std::optional<std::int64_t> shell_bound)
      : coord_ratio_(std::move(coord_ratio)),
        coord_bound_(std::move(coord_bound)),
        shell_ratio_(std::move(shell_ratio)),
        shell_bound_(shell_bound),
        coord_(coord_ratio_.size(), std::vector<detail::Scaled>{detail::Scaled(1.0)}),
        shell_{detail::Scaled(1.0)} {}

  // Largest total degree with a possibly nonzero term, if finite.
  std::optional<std::int64_t> max_degree() const {
    std::optional<std::int64_t> coords = 0;
    for (const auto& b : coord_bound_) {
      if (!b) {
        coords.reset();
        break;
      }
      *coords += *b;
    }
    return min_opt(coords, shell_bound_);
  }

  Complex shell(std::int64_t s) {
    extend(s);
    if (shell_[s].is_zero()) return 0.0;
    Complex total = 0.0;
    compose(0, s, shell_[s], total);
    return total;
  }

 private:
  void extend(std::int64_t s) {
    while (static_cast<std::int64_t>(shell_.size()) <= s) {
      const auto k = static_cast<std::int64_t>(shell_.size()) - 1;
      detail::Scaled next = shell_.back();
      next *= shell_ratio_(k);
      shell_.push_back(next);
    }
    for (std::size_t j = 0; j < coord_.size(); ++j) {
      auto& c = coord_[j];
      while (static_cast<std::int64_t>(c.size()) <= s) {
        const auto k = static_cast<std::int64_t>(c.size()) - 1;
        detail::Scaled next = c.back();
        next *= coord_ratio_[j](k);
        c.push_back(next);
      }
    }
  }

  void compose(std::size_t j, std::int64_t remaining, const detail::Scaled& acc, Complex& total) {
    const std::size_t d = coord_.size();
    if (j + 1 == d) {
      const auto& f = coord_[j][remaining];
      if (!f.is_zero()) total += (acc * f).value();
      return;
    }
    std::int64_t hi = remaining;
    if (coord_bound_[j]) hi = std::min(hi, *coord_bound_[j]);
    for (std::int64_t a = 0; a <= hi; ++a) {
      const auto& f = coord_[j][a];
      if (f.is_zero()) continue;
      compose(j + 1, remaining - a, acc * f, total);
    }
  }

  std::vector<Ratio> coord_ratio_;
  std::vector<std::optional<std::int64_t>> coord_bound_;
  Ratio shell_ratio_;
  std::optional<std::int64_t> shell_bound_;
  std::vector<std::vector<detail::Scaled>> coord_;
  std::vector<detail::Scaled> shell_;
};

// rate: asymptotic ratio of successive shells when known (0 otherwise); the
// stopping test then bounds the geometric tail, not just the last shell.
inline SeriesValue run_shells(ShellSum& series, double tol, std::int64_t max_total_degree,
                              const char* what, double rate = 0.0) {
  const double tail_factor = rate > 0.0 && rate < 1.0 ? std::max(1.0, rate / (1.0 - rate)) : 1.0;
  SeriesValue out;
  const auto last = series.max_degree();
  Complex sum = 0.0;
  double last_shell = 0.0;
  int quiet = 0;
  std::int64_t s = 0;
  for (;; ++s) {
    if (last && s > *last) break;
    if (s > max_total_degree) {
      throw ConvergenceError(std::string(what) + ": max total degree exhausted", last_shell);
    }
    const Complex shell = series.shell(s);
    sum += shell;
    last_shell = std::abs(shell);
    if (!last) {
      quiet = (tail_factor * last_shell <= tol * std::abs(sum)) ? quiet + 1 : 0;
      if (quiet >= kQuietShells) {
        ++s;
        break;
      }
    }
  }
  out.value = sum;
  out.terms_used = s;
  out.err_estimate = last ? 0.0 : tail_factor * last_shell;
  out.converged = true;
  return out;
}

}  // namespace latgreen::detail
