#include "latgreen/oracles.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace latgreen {

namespace {

void require_point(int d, const LatticePoint& n, const char* what) {
  if (d < 1) throw DomainError(std::string(what) + ": dimension must be >= 1");
  if (n.dim() != static_cast<std::size_t>(d)) {
    throw DomainError(std::string(what) + ": expected a point of Z^" + std::to_string(d));
  }
}

bool is_power_of_two(std::int64_t v) { return v >= 2 && (v & (v - 1)) == 0; }

struct TorusSums {
  Complex full = 0.0;
  Complex coarse = 0.0;  // points with every index even
};

// Recursively accumulates prod_j cos(n_j theta_j) / (2d - 2 sum cos theta_j - z).
class TorusGrid {
 public:
  TorusGrid(int d, Complex z, const LatticePoint& n, std::int64_t N) : d_(d), z_(z), N_(N) {
    cos_.resize(static_cast<std::size_t>(N));
    for (std::int64_t i = 0; i < N; ++i) {
      cos_[i] = std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(N));
    }
    phase_.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      auto& p = phase_[j];
      p.resize(static_cast<std::size_t>(N));
      const std::int64_t nj = std::abs(n[j]);
      // cos(n_j theta_i) from the index (n_j i) mod N: exact periodicity
      for (std::int64_t i = 0; i < N; ++i) p[i] = cos_[(nj * i) % N];
    }
  }

  TorusSums run() {
    TorusSums s;
    recurse(0, 2.0 * d_ - z_, 1.0, true, s);
    return s;
  }

 private:
  void recurse(int j, Complex denom, double num, bool even, TorusSums& s) {
    const auto& p = phase_[j];
    if (j + 1 == d_) {
      Complex full = 0.0;
      Complex coarse = 0.0;
      for (std::int64_t i = 0; i < N_; ++i) {
        const Complex v = num * p[i] / (denom - 2.0 * cos_[i]);
        full += v;
        if (even && i % 2 == 0) coarse += v;
      }
      s.full += full;
      s.coarse += coarse;
      return;
    }
    for (std::int64_t i = 0; i < N_; ++i) {
      recurse(j + 1, denom - 2.0 * cos_[i], num * p[i], even && i % 2 == 0, s);
    }
  }

  int d_;
  Complex z_;
  std::int64_t N_;
  std::vector<double> cos_;
  std::vector<std::vector<double>> phase_;
};

}  // namespace

OracleValue quadrature_torus(int d, Complex z, const LatticePoint& n, std::int64_t n_per_dim) {
  require_point(d, n, "quadrature_torus");
  require_finite(z, "quadrature_torus");
  if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 4.0 * d) {
    throw RegionError("quadrature: z in [0, " + std::to_string(4 * d) +
                      "]: the integrand is singular on the torus");
  }
  if (!is_power_of_two(n_per_dim)) throw DomainError("quadrature_torus: N must be a power of two");
  if (std::pow(static_cast<double>(n_per_dim), d) > static_cast<double>(kQuadratureMaxPoints)) {
    throw DomainError("quadrature_torus: grid exceeds 2^28 points");
  }
  TorusGrid grid(d, z, n, n_per_dim);
  const TorusSums s = grid.run();
  const double full_w = std::pow(static_cast<double>(n_per_dim), -d);
  const double coarse_w = std::pow(static_cast<double>(n_per_dim / 2), -d);
  OracleValue out;
  out.value = s.full * full_w;
  out.err_estimate = std::abs(out.value - s.coarse * coarse_w);
  out.work = n_per_dim;
  return out;
}

OracleValue quadrature_torus_auto(int d, Complex z, const LatticePoint& n, double tol) {
  OracleValue last;
  for (std::int64_t N = kQuadratureStartN; N <= kQuadratureMaxN; N *= 2) {
    if (std::pow(static_cast<double>(N), d) > static_cast<double>(kQuadratureMaxPoints)) break;
    last = quadrature_torus(d, z, n, N);
    if (last.err_estimate <= tol * std::abs(last.value)) return last;
  }
  throw ConvergenceError("quadrature: z too close to the spectrum for the requested tolerance",
                         last.err_estimate);
}

double bessel_i_scaled(std::int64_t nu, double x) {
  if (nu < 0) throw DomainError("bessel_i: order must be >= 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("bessel_i: argument must be finite and >= 0");
  if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
  const double nd = static_cast<double>(nu);
  const double log_half = std::log(x / 2.0);
  double lt = nd * log_half - std::lgamma(nd + 1.0) - x;
  double sum = 0.0;
  for (std::int64_t k = 0;; ++k) {
    const double t = std::exp(lt);
    sum += t;
    const double kd = static_cast<double>(k);
    if (kd > x / 2.0 && t <= 1e-17 * sum) break;
    lt += 2.0 * log_half - std::log(kd + 1.0) - std::log(kd + 1.0 + nd);
  }
  return sum;
}

double bessel_i(std::int64_t nu, double x) {
  const double s = bessel_i_scaled(nu, x);
  if (x > 700.0) throw DomainError("bessel_i: overflow; use bessel_i_scaled");
  return s * std::exp(x);
}

OracleValue laplace_bessel(int d, Complex z, const LatticePoint& n, double tol) {
  require_point(d, n, "laplace_bessel");
  require_finite(z, "laplace_bessel");
  if (!(z.real() < 0.0)) throw RegionError("bessel-laplace: requires Re z < 0");
  const double a = -z.real();

  auto weight = [&](double t) {
    double w = std::exp(-a * t);
    for (int j = 0; j < d; ++j) w *= bessel_i_scaled(std::abs(n[j]), 2.0 * t);
    return w;
  };
  auto re = [&](double t) { return weight(t) * std::cos(t * z.imag()); };
  auto im = [&](double t) { return weight(t) * std::sin(t * z.imag()); };

  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double panel_tol = std::max(tol * 1e-2, 1e-15);
  constexpr int kMaxPanels = 64;
  OracleValue out;
  double lo = 0.0;
  double hi = 1.0;
  double err = 0.0;
  // Tail beyond lo: prod_j e^{-2t} I_{n_j}(2t) <= 1, so it is at most e^{-a lo}/a.
  // Panels double in length until that bound is below tol relative to the value.
  double tail = 1.0 / a;
  while (out.work < kMaxPanels && !(out.value != 0.0 && tail <= tol * std::abs(out.value))) {
    double e_re = 0.0;
    double e_im = 0.0;
    const double v_re = GK::integrate(re, lo, hi, 15, panel_tol, &e_re);
    const double v_im = z.imag() == 0.0 ? 0.0 : GK::integrate(im, lo, hi, 15, panel_tol, &e_im);
    out.value += Complex(v_re, v_im);
    err += std::abs(e_re) * std::max(1.0, std::abs(v_re)) + std::abs(e_im) * std::max(1.0, std::abs(v_im));
    ++out.work;
    lo = hi;
    hi *= 2.0;
    tail = std::exp(-a * lo) / a;
  }
  if (tail > tol * std::abs(out.value)) throw ConvergenceError("bessel-laplace: tail did not decay", tail);
  out.err_estimate = err + tail;
  return out;
}

Complex laplace_closed_1d(Complex z, std::int64_t nu) {
  require_finite(z, "laplace_closed_1d");
  if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 4.0) {
    throw RegionError("laplace transform: z in [0, 4]");
  }
  nu = std::abs(nu);
  const Complex s = 2.0 - z;
  constexpr double omega = 2.0;
  const Complex minus = principal_sqrt(s - omega);
  const Complex plus = principal_sqrt(s + omega);
  return std::pow(plus - minus, 2.0 * static_cast<double>(nu)) /
         (std::pow(2.0 * omega, static_cast<double>(nu)) * minus * plus);
}

double WalkConfig::tail_bound() const {
  if (eps >= 1.0) return 0.0;
  return std::pow(1.0 - eps, static_cast<double>(kmax + 1)) / eps;
}

void WalkConfig::validate() const {
  if (dim < 1) throw DomainError("walk: dimension must be >= 1");
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("walk: eps must lie in (0, 1]");
  if (kmax < 0) throw DomainError("walk: kmax must be >= 0");
}

WalkConfig WalkConfig::for_tolerance(int dim, double eps, double tail_tol) {
  WalkConfig cfg{dim, eps, 0};
  cfg.validate();
  if (!(tail_tol > 0.0)) throw DomainError("walk: tail tolerance must be > 0");
  if (eps < 1.0) {
    const double k = std::log(tail_tol * eps) / std::log1p(-eps) - 1.0;
    cfg.kmax = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(k)));
    while (cfg.tail_bound() > tail_tol) ++cfg.kmax;
  }
  return cfg;
}

namespace {

void compositions(std::size_t j, std::int64_t remaining, const std::vector<std::int64_t>& absn,
                  std::vector<std::int64_t>& alpha, const std::function<void()>& visit) {
  if (j + 1 == absn.size()) {
    alpha[j] = remaining;
    visit();
    return;
  }
  for (std::int64_t a = 0; a <= remaining; ++a) {
    alpha[j] = a;
    compositions(j + 1, remaining - a, absn, alpha, visit);
  }
}

BigInt factorial(std::int64_t k) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= k; ++i) f *= i;
  return f;
}

// C(k, (k+u)/2) / 2^k for k = k0, k0 + 2, ... (k0 >= |u|, same parity).
class HalfBinomial {
 public:
  HalfBinomial(std::int64_t u, std::int64_t k0) : u_(std::abs(u)), k_(k0) {
    const auto j = static_cast<long double>((k0 + u_) / 2);
    const auto kk = static_cast<long double>(k0);
    value_ = std::exp(std::lgamma(kk + 1.0L) - std::lgamma(j + 1.0L) - std::lgamma(kk - j + 1.0L) -
                      kk * std::log(2.0L));
  }
  long double value() const { return value_; }
  void advance() {
    const auto k = static_cast<long double>(k_);
    const auto j = static_cast<long double>((k_ + u_) / 2);
    value_ *= (k + 1.0L) * (k + 2.0L) / ((j + 1.0L) * (k - j + 1.0L) * 4.0L);
    k_ += 2;
  }

 private:
  std::int64_t u_;
  std::int64_t k_;
  long double value_;
};

}  // namespace

Rational walk_prob_exact(int d, std::int64_t k, const LatticePoint& n) {
  require_point(d, n, "walk_prob_exact");
  if (k < 0) throw DomainError("walk_prob_exact: k must be >= 0");
  const std::int64_t abs_n = n.l1();
  if (k < abs_n || (k - abs_n) % 2 != 0) return 0;
  std::vector<std::int64_t> absn(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) absn[j] = std::abs(n[j]);
  std::vector<std::int64_t> alpha(static_cast<std::size_t>(d));
  const BigInt kf = factorial(k);
  BigInt count = 0;
  compositions(0, (k - abs_n) / 2, absn, alpha, [&] {
    BigInt den = 1;
    for (int j = 0; j < d; ++j) den *= factorial(alpha[j]) * factorial(alpha[j] + absn[j]);
    count += kf / den;
  });
  BigInt total = 1;
  for (std::int64_t i = 0; i < k; ++i) total *= 2 * d;
  return Rational(count, total);
}

double walk_prob(int d, std::int64_t k, const LatticePoint& n) {
  require_point(d, n, "walk_prob");
  if (d > 2) throw DomainError("walk_prob: floating product form needs d <= 2");
  if (k < 0) throw DomainError("walk_prob: k must be >= 0");
  const std::int64_t abs_n = n.l1();
  if (k < abs_n || (k - abs_n) % 2 != 0) return 0.0;
  if (d == 1) return static_cast<double>(HalfBinomial(n[0], k).value());
  const std::int64_t u = n[0] + n[1];
  const std::int64_t v = n[0] - n[1];
  return static_cast<double>(HalfBinomial(u, k).value() * HalfBinomial(v, k).value());
}

WalkValue walk_expectation(const WalkConfig& cfg, const LatticePoint& n) {
  cfg.validate();
  require_point(cfg.dim, n, "walk_expectation");
  WalkValue out;
  out.tail_bound = cfg.tail_bound();
  const std::int64_t k0 = n.l1();
  if (k0 > cfg.kmax) return out;
  const long double q = 1.0L - static_cast<long double>(cfg.eps);
  const long double q2 = q * q;
  long double damp = std::pow(q, static_cast<long double>(k0));
  long double sum = 0.0L;

  if (cfg.dim <= 2) {
    // P(X_k = n) is a product of central-type binomials after rotating Z^2 by 45 degrees.
    HalfBinomial bu(cfg.dim == 1 ? n[0] : n[0] + n[1], k0);
    HalfBinomial bv(cfg.dim == 1 ? 0 : n[0] - n[1], cfg.dim == 1 ? 0 : k0);
    for (std::int64_t k = k0; k <= cfg.kmax; k += 2) {
      const long double p = cfg.dim == 1 ? bu.value() : bu.value() * bv.value();
      sum += damp * p;
      ++out.terms;
      damp *= q2;
      if (damp == 0.0L) break;
      bu.advance();
      if (cfg.dim == 2) bv.advance();
    }
  } else {
    std::vector<std::int64_t> absn(static_cast<std::size_t>(cfg.dim));
    for (int j = 0; j < cfg.dim; ++j) absn[j] = std::abs(n[j]);
    std::vector<std::int64_t> alpha(absn.size());
    const long double log2d = std::log(2.0L * cfg.dim);
    for (std::int64_t k = k0; k <= cfg.kmax; k += 2) {
      long double p = 0.0L;
      const long double lk = std::lgamma(static_cast<long double>(k) + 1.0L) -
                             static_cast<long double>(k) * log2d;
      compositions(0, (k - k0) / 2, absn, alpha, [&] {
        long double l = lk;
        for (std::size_t j = 0; j < absn.size(); ++j) {
          l -= std::lgamma(static_cast<long double>(alpha[j]) + 1.0L) +
               std::lgamma(static_cast<long double>(alpha[j] + absn[j]) + 1.0L);
        }
        p += std::exp(l);
      });
      sum += damp * p;
      ++out.terms;
      damp *= q2;
      if (damp == 0.0L) break;
    }
  }
  out.value = static_cast<double>(sum);
  return out;
}

double renormalization_counterterm(int d, double eps) {
  if (!(eps > 0.0)) throw DomainError("counterterm: eps must be > 0");
  if (d == 1) return 1.0 / std::sqrt(2.0 * eps);
  if (d == 2) return -std::log(4.0 * eps) / std::numbers::pi;
  return 0.0;
}

RenormalizedLimit renormalized_limit(int d, const LatticePoint& n, std::span<const double> eps,
                                     double tail_tol) {
  if (d != 1 && d != 2) throw DomainError("renormalized_limit: d must be 1 or 2");
  require_point(d, n, "renormalized_limit");
  if (eps.size() < 2) throw ConvergenceError("renormalized_limit: need at least two eps values", 0.0);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0 && eps[i] < 1.0)) throw DomainError("renormalized_limit: eps must lie in (0, 1)");
    if (i > 0 && !(eps[i] < eps[i - 1])) {
      throw ConvergenceError("renormalized_limit: eps sequence must be strictly decreasing", 0.0);
    }
  }
  RenormalizedLimit out;
  const auto m = static_cast<Eigen::Index>(eps.size());
  const Eigen::Index p = std::min<Eigen::Index>(4, m);
  Eigen::MatrixXd A(m, p);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double e = eps[static_cast<std::size_t>(i)];
    const WalkValue w = walk_expectation(WalkConfig::for_tolerance(d, e, tail_tol), n);
    const double sample = w.value - renormalization_counterterm(d, e);
    out.samples.push_back(sample);
    b(i) = sample;
    const double basis[4] = {1.0, d == 1 ? std::sqrt(e) : e * std::log(e), e,
                             d == 1 ? e * std::sqrt(e) : e * e * std::log(e)};
    for (Eigen::Index j = 0; j < p; ++j) A(i, j) = basis[j];
  }
  // Column scaling keeps the least-squares problem well conditioned.
  Eigen::VectorXd scale = A.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < p; ++j) A.col(j) /= scale(j);
  const Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
  out.limit = c(0) / scale(0);
  out.fit_residual = (A * c - b).norm();
  out.spread = std::abs(out.limit - out.samples.back());
  if (!std::isfinite(out.limit)) throw ConvergenceError("renormalized_limit: fit failed", out.spread);
  return out;
}

OracleValue potential_kernel_2d(const LatticePoint& n, double tol) {
  if (n.dim() != 2) throw DomainError("potential_kernel_2d: expected a point of Z^2");
  const auto n1 = static_cast<double>(std::abs(n[0]));
  const auto n2 = static_cast<double>(std::abs(n[1]));
  // Integrating theta_2 in closed form:
  //   a(n) = (4/pi) int_0^pi (1 - cos(n1 t) rho^{n2}) / sqrt(c^2 - 4) dt,
  //   c = 4 - 2 cos t, rho = (c - sqrt(c^2 - 4)) / 2,
  // written without cancellation near t = 0.
  auto f = [n1, n2](double t) {
    if (t == 0.0) return n2 / 2.0;  // limiting value
    const double s = std::sin(t / 2.0);
    const double cm2 = 4.0 * s * s;  // c - 2
    const double root = 2.0 * std::abs(s) * std::sqrt(cm2 + 4.0);
    const double log_rho = std::log1p((cm2 - root) / 2.0);
    const double one_minus_rho = -std::expm1(n2 * log_rho);
    const double one_minus_cos = 2.0 * std::pow(std::sin(n1 * t / 2.0), 2);
    const double rho_n = 1.0 - one_minus_rho;
    return (one_minus_cos * rho_n + one_minus_rho) / root;
  };
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, std::numbers::pi, 20, tol, &err);
  OracleValue out;
  out.value = 4.0 / std::numbers::pi * v;
  out.err_estimate = 4.0 / std::numbers::pi * err;
  out.work = 1;
  return out;
}

}  // namespace latgreen
