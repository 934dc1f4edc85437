#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "latgreen/resolvent.hpp"

namespace latgreen {

namespace {

constexpr std::int64_t kMaxTerms = 200000;

using Quad = std::array<HalfInt, 4>;

// (n1 >= n2 >= 0) with signs folded away; every d = 2 formula is symmetric.
std::pair<std::int64_t, std::int64_t> folded(const LatticePoint& n) {
  if (n.dim() != 2) throw DomainError("expected a point of Z^2");
  const LatticePoint r = reduce_symmetry(n);
  return {r[0], r[1]};
}

// The four parameters (c + s1 n1 + s2 n2) / 2 for all sign choices.
Quad pm_params(std::int64_t c, std::int64_t n1, std::int64_t n2) {
  return {HalfInt::half(c + n1 + n2), HalfInt::half(c + n1 - n2), HalfInt::half(c - n1 + n2),
          HalfInt::half(c - n1 - n2)};
}

// 4F3(up; 1, b1, b2; w)
Complex pfq43(const Quad& up, HalfInt b1, HalfInt b2, Complex w, double tol) {
  const PFQParams p{{up[0], up[1], up[2], up[3]}, {HalfInt(1), b1, b2}};
  return eval_pfq(p, w, tol).value;
}

using Wide = std::complex<long double>;

Complex narrow(Wide v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

// Internal series feed combinations that cancel heavily for larger |n|, so
// they are summed well below the caller's tolerance in extended precision.
double series_tol(double tol) { return std::min(tol, kDefaultTol) * 1e-6; }

// sum_k prod_i (p_i)_k / (k!^2 (b)_k^2) x^k [2 psi(1+k) + 2 psi(b+k) - sum_i psi(p_i+k) - L]
SeriesValue log_series(const Quad& p, HalfInt b, Complex x, Complex log_term, double tol) {
  std::array<long double, 4> pd{};
  std::array<long double, 4> psi{};
  for (std::size_t i = 0; i < 4; ++i) {
    pd[i] = p[i].to_double();
    psi[i] = digamma(p[i]);
  }
  const long double bd = b.to_double();
  long double psi_one = -kEulerGamma;
  long double psi_b = digamma(b);
  const Wide wx(x.real(), x.imag());
  const Wide wl(log_term.real(), log_term.imag());

  SeriesValue out;
  Wide coef = 1.0L;
  Wide sum = 0.0L;
  int quiet = 0;
  long double last = 0.0L;
  std::int64_t k = 0;
  for (; k < kMaxTerms; ++k) {
    const auto kd = static_cast<long double>(k);
    const long double psi_sum = psi[0] + psi[1] + psi[2] + psi[3];
    const Wide t = coef * (2.0L * psi_one + 2.0L * psi_b - psi_sum - wl);
    sum += t;
    last = std::abs(t);
    quiet = (last <= tol * std::abs(sum)) ? quiet + 1 : 0;
    if (quiet >= 3) break;
    long double num = 1.0L;
    for (std::size_t i = 0; i < 4; ++i) {
      num *= pd[i] + kd;
      psi[i] += 1.0L / (pd[i] + kd);
    }
    coef *= wx * (num / ((kd + 1.0L) * (kd + 1.0L) * (bd + kd) * (bd + kd)));
    psi_one += 1.0L / (kd + 1.0L);
    psi_b += 1.0L / (bd + kd);
  }
  if (quiet < 3) throw ConvergenceError("log series: no convergence", static_cast<double>(last));
  out.value = narrow(sum);
  out.terms_used = k + 1;
  out.err_estimate = static_cast<double>(last);
  out.converged = true;
  return out;
}

// sum_k (1/2+m)_k (1/2-m)_k / k!^2 x^k [2 psi(1+k) - psi(1/2+m+k) - psi(1/2-m+k) - L]
struct DiagSum {
  Complex value;
  double magnitude;  // sum of |term|
};

DiagSum diag_series(std::int64_t m, Complex x, Complex log_term, double tol) {
  const long double a = 0.5L + static_cast<long double>(m);
  const long double b = 0.5L - static_cast<long double>(m);
  long double psi_a = digamma(HalfInt::half(1 + 2 * m));
  long double psi_b = digamma(HalfInt::half(1 - 2 * m));
  long double psi_one = -kEulerGamma;
  const Wide wx(x.real(), x.imag());
  const Wide wl(log_term.real(), log_term.imag());
  Wide coef = 1.0L;
  Wide sum = 0.0L;
  long double magnitude = 0.0L;
  int quiet = 0;
  long double last = 0.0L;
  for (std::int64_t k = 0; k < kMaxTerms; ++k) {
    const auto kd = static_cast<long double>(k);
    const Wide t = coef * (2.0L * psi_one - psi_a - psi_b - wl);
    sum += t;
    last = std::abs(t);
    magnitude += last;
    quiet = (last <= tol * std::abs(sum)) ? quiet + 1 : 0;
    if (quiet >= 3) return {narrow(sum), static_cast<double>(magnitude + last)};
    coef *= wx * ((a + kd) * (b + kd) / ((kd + 1.0L) * (kd + 1.0L)));
    psi_a += 1.0L / (a + kd);
    psi_b += 1.0L / (b + kd);
    psi_one += 1.0L / (kd + 1.0L);
  }
  throw ConvergenceError("diagonal series: no convergence", static_cast<double>(last));
}

bool threshold4_covers(Complex z) { return std::abs(z - 4.0) < 4.0 && z.imag() != 0.0; }
bool endpoint_covers(Complex z) { return std::abs(z * (8.0 - z)) < 16.0 && z.real() != 4.0; }

void require_off_spectrum_2d(Complex z) {
  require_finite(z, "d = 2 kernel");
  if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 8.0) {
    throw RegionError("z in [0, 8]: the kernel is defined off the spectrum");
  }
}

}  // namespace

GreenValue green_2d_embedded(Complex z, const LatticePoint& n, double tol) {
  require_finite(z, "embedded2d");
  if (!threshold4_covers(z)) throw RegionError("embedded2d: requires |z - 4| < 4 and Im z != 0");
  if (z.imag() < 0.0) {
    GreenValue g = green_2d_embedded(std::conj(z), n, tol);
    g.value = std::conj(g.value);
    return g;
  }
  const auto [n1, n2] = folded(n);
  const double sign = sign_pow(n1);  // (-1)^max
  const Complex w4 = (z - 4.0) / 4.0;
  const Complex x = w4 * w4;
  const Complex log_term = principal_log(-x);
  const double sum_half = static_cast<double>(n1 + n2) / 2.0;
  const double diff_half = static_cast<double>(n1 - n2) / 2.0;
  constexpr Complex kI(0.0, 1.0);

  GreenValue out;
  out.representation = Representation::embedded_2d;
  if ((n1 + n2) % 2 == 0) {
    Complex analytic = 0.0;
    if (n1 + n2 > 0 && n1 != n2) {
      analytic = sign * sum_half * diff_half * w4 *
                 pfq43(pm_params(2, n1, n2), kThreeHalves, kThreeHalves, x, tol);
    }
    const SeriesValue s = log_series(pm_params(1, n1, n2), kHalf, x, log_term, series_tol(tol));
    const double pref = sign / (4.0 * std::numbers::pi);
    out.value = analytic + kI * pref * s.value;
    out.terms_used = s.terms_used;
    out.err_estimate = pref * s.err_estimate;
  } else {
    const Complex analytic = sign / 4.0 * pfq43(pm_params(1, n1, n2), kHalf, kHalf, x, tol);
    const SeriesValue s = log_series(pm_params(2, n1, n2), kThreeHalves, x, log_term, series_tol(tol));
    const Complex pref = sign / std::numbers::pi * sum_half * diff_half * w4;
    out.value = analytic + kI * pref * s.value;
    out.terms_used = s.terms_used;
    out.err_estimate = std::abs(pref) * s.err_estimate;
  }
  return out;
}

GreenValue green_2d_embedded_boundary(const LatticePoint& n) {
  const auto [n1, n2] = folded(n);
  const double sign = sign_pow(n1);
  GreenValue out;
  out.representation = Representation::embedded_2d_boundary;
  out.terms_used = 1;
  if ((n1 + n2) % 2 == 0) {
    const Quad p = pm_params(1, n1, n2);
    double bracket = 2.0 * digamma(HalfInt(1)) + 2.0 * digamma(kHalf);
    for (const HalfInt& pi : p) bracket -= digamma(pi);
    out.value = Complex(0.0, sign / (4.0 * std::numbers::pi) * bracket);
  } else {
    out.value = sign / 4.0;
  }
  return out;
}

namespace {

constexpr double kRounding = 4.0 * std::numeric_limits<double>::epsilon();

// P0(m) with an absolute error bound (truncation plus rounding).
struct DiagValue {
  Complex value;
  double err;
};

DiagValue diag_p0_impl(Complex z, std::int64_t m, DiagForm form, double tol) {
  require_off_spectrum_2d(z);
  m = std::abs(m);
  if (form == DiagForm::automatic) {
    if (endpoint_covers(z)) {
      form = DiagForm::endpoint;
    } else if (threshold4_covers(z)) {
      form = DiagForm::threshold4;
    } else if (std::abs(4.0 - z) > 4.0) {
      const GreenValue g = green_laurent_2d(z, LatticePoint{m, m}, tol);
      // the stopping rule leaves up to ~tol relative
      return {static_cast<double>(sign_pow(m)) * g.value,
              g.err_estimate + (tol + kRounding) * std::abs(g.value)};
    } else {
      throw RegionError("diagonal values: no representation covers z");
    }
  }
  const double inv4pi = 1.0 / (4.0 * std::numbers::pi);
  constexpr Complex kI(0.0, 1.0);
  if (form == DiagForm::threshold4) {
    if (!threshold4_covers(z)) throw RegionError("diagonal threshold-4 form: requires |z - 4| < 4, Im z != 0");
    if (z.imag() < 0.0) {
      const DiagValue c = diag_p0_impl(std::conj(z), m, form, tol);
      return {std::conj(c.value), c.err};
    }
    const Complex w4 = (z - 4.0) / 4.0;
    const Complex x = w4 * w4;
    const DiagSum d = diag_series(m, x, principal_log(-x), series_tol(tol));
    return {kI * inv4pi * d.value, inv4pi * kRounding * d.magnitude};
  }
  if (!endpoint_covers(z)) throw RegionError("diagonal endpoint form: requires |z(8 - z)| < 16, Re z != 4");
  const Complex x = z * (8.0 - z) / 16.0;
  const double side = (4.0 - z.real() > 0.0) ? 1.0 : -1.0;
  const DiagSum d = diag_series(m, x, principal_log(-x), series_tol(tol));
  return {side * sign_pow(m) * inv4pi * d.value, inv4pi * kRounding * d.magnitude};
}

std::vector<DiagValue> diag_p0_table(Complex z, std::int64_t max_m, double tol) {
  std::vector<DiagValue> out;
  for (std::int64_t m = 0; m <= max_m; ++m) out.push_back(diag_p0_impl(z, m, DiagForm::automatic, tol));
  return out;
}

}  // namespace

Complex diag_p0(Complex z, std::int64_t m, DiagForm form, double tol) {
  return diag_p0_impl(z, m, form, tol).value;
}

std::vector<Complex> diag_p0_values(Complex z, std::int64_t max_m, DiagForm form, double tol) {
  if (max_m < 0) throw DomainError("diag_p0_values: max_m < 0");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(max_m + 1));
  for (std::int64_t m = 0; m <= max_m; ++m) out.push_back(diag_p0(z, m, form, tol));
  return out;
}

namespace {

void require_p0(std::span<const Complex> p0, std::int64_t need) {
  if (static_cast<std::int64_t>(p0.size()) <= need) {
    throw DomainError("diagonal values P0(0.." + std::to_string(need) + ") required");
  }
}

Quad q4(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {HalfInt(a), HalfInt(b), HalfInt(c), HalfInt(d)};
}

}  // namespace

namespace {

// A value with a bound on the magnitudes that produced it; propagating it
// through the endpoint formulas gives a running rounding-error bound.
struct Tracked {
  Complex v;
  double mag;
};

Tracked operator+(Tracked a, Tracked b) { return {a.v + b.v, a.mag + b.mag}; }
Tracked operator-(Tracked a, Tracked b) { return {a.v - b.v, a.mag + b.mag}; }
Tracked operator*(Tracked a, Tracked b) { return {a.v * b.v, a.mag * b.mag}; }

Tracked tracked(Complex v) { return {v, std::abs(v)}; }

std::vector<Tracked> tracked_all(std::span<const Complex> v) {
  std::vector<Tracked> out;
  for (Complex x : v) out.push_back(tracked(x));
  return out;
}

Tracked pfq43_tracked(const Quad& up, HalfInt b1, HalfInt b2, Complex w) {
  const PFQParams p{{up[0], up[1], up[2], up[3]}, {HalfInt(1), b1, b2}};
  const SeriesValue s = eval_pfq(p, w, 0.0);  // terminating: tolerance unused
  return {s.value, s.magnitude};
}

Tracked endpoint_P_tracked(Complex z, std::int64_t m, std::int64_t l, std::span<const Tracked> p0) {
  const Tracked w4 = tracked((z - 4.0) / 4.0);
  const Complex w = w4.v * w4.v;
  auto p = [&](std::int64_t k) { return p0[static_cast<std::size_t>(k)]; };

  Tracked r{0.0, 0.0};
  if (m > 0 && l > 0) {
    r = r + w4 * tracked(static_cast<double>(m * l)) *
                pfq43_tracked(q4(1 + m, 1 - m, 1 + l, 1 - l), kThreeHalves, kThreeHalves, w);
  }
  r = r + p(0) * pfq43_tracked(q4(m, -m, l, -l), kHalf, kHalf, w);
  for (std::int64_t mu = 1; mu <= m; ++mu) {
    r = r + (p(mu) - p(mu - 1)) * pfq43_tracked(q4(1 + m - mu, mu - m, l, -l), kHalf, kHalf, w);
  }
  for (std::int64_t nu = 1; nu <= l; ++nu) {
    r = r + (p(nu) - p(nu - 1)) * pfq43_tracked(q4(m, -m, 1 + l - nu, nu - l), kHalf, kHalf, w);
  }
  return r;
}

Tracked endpoint_Q_tracked(Complex z, std::int64_t m, std::int64_t l, std::span<const Tracked> p0) {
  const Tracked w4 = tracked((z - 4.0) / 4.0);
  const Complex w = w4.v * w4.v;
  auto p = [&](std::int64_t k) { return p0[static_cast<std::size_t>(k)]; };
  const Tracked dm = tracked(static_cast<double>(2 * m + 1));
  const Tracked dl = tracked(static_cast<double>(2 * l + 1));

  Tracked r = tracked(-0.25) * pfq43_tracked(q4(1 + m, -m, 1 + l, -l), kHalf, kHalf, w);
  r = r + w4 * dm * dl * p(0) * pfq43_tracked(q4(1 + m, -m, 1 + l, -l), kThreeHalves, kThreeHalves, w);
  Tracked s{0.0, 0.0};
  for (std::int64_t mu = -m; mu <= m; ++mu) {
    const std::int64_t a = std::abs(mu);
    s = s + p(a) * pfq43_tracked(q4(1 + m - a, a - m, 1 + l, -l), kHalf, kThreeHalves, w);
  }
  r = r - w4 * dl * s;
  s = {0.0, 0.0};
  for (std::int64_t nu = -l; nu <= l; ++nu) {
    const std::int64_t a = std::abs(nu);
    s = s + p(a) * pfq43_tracked(q4(1 + m, -m, 1 + l - a, a - l), kHalf, kThreeHalves, w);
  }
  r = r - w4 * dm * s;
  return r;
}

}  // namespace

Complex endpoint_P(Complex z, std::int64_t m, std::int64_t l, std::span<const Complex> p0) {
  if (m < 0 || l < 0) throw DomainError("endpoint_P: requires m, l >= 0");
  require_p0(p0, std::max(m, l));
  return endpoint_P_tracked(z, m, l, tracked_all(p0)).v;
}

Complex endpoint_Q(Complex z, std::int64_t m, std::int64_t l, std::span<const Complex> p0) {
  if (m < 0 || l < 0) throw DomainError("endpoint_Q: requires m, l >= 0");
  require_p0(p0, std::max(m, l));
  return endpoint_Q_tracked(z, m, l, tracked_all(p0)).v;
}

RotatedRecurrence::RotatedRecurrence(Complex z, std::span<const Complex> p0, std::int64_t max_m,
                                     std::int64_t max_l)
    : max_m_(max_m), max_l_(max_l) {
  if (max_m < 0 || max_l < 0) throw DomainError("RotatedRecurrence: negative size");
  require_p0(p0, std::max(max_m, max_l));
  const auto cols = static_cast<std::size_t>(max_l + 1);
  const auto rows = static_cast<std::size_t>(max_m + 1);
  p_.assign(rows * cols, 0.0);
  q_.assign(rows * cols, 0.0);
  const Complex w4 = (z - 4.0) / 4.0;
  const Complex quarter_sq = (z - 4.0) * (z - 4.0) / 4.0;
  auto at = [cols](std::int64_t m, std::int64_t l) {
    return static_cast<std::size_t>(m) * cols + static_cast<std::size_t>(l);
  };
  auto mult = [](std::int64_t k) { return k == 0 ? 1.0 : 2.0; };

  for (std::int64_t m = 0; m <= max_m; ++m) {
    for (std::int64_t l = 0; l <= max_l; ++l) {
      Complex s = 0.0;
      for (std::int64_t mu = 0; mu < m; ++mu) {
        for (std::int64_t nu = 0; nu < l; ++nu) {
          s += mult(mu) * mult(nu) * static_cast<double>((m - mu) * (l - nu)) * p_[at(mu, nu)];
        }
      }
      p_[at(m, l)] = w4 * static_cast<double>(m * l) - p0[0] + p0[m] + p0[l] + quarter_sq * s;
    }
  }
  for (std::int64_t m = 0; m <= max_m; ++m) {
    for (std::int64_t l = 0; l <= max_l; ++l) {
      Complex s = 0.0;
      for (std::int64_t mu = 0; mu <= m; ++mu) {
        for (std::int64_t nu = 0; nu <= l; ++nu) s += mult(mu) * mult(nu) * p_[at(mu, nu)];
      }
      q_[at(m, l)] = -0.25 - w4 * s;
    }
  }
}

Complex RotatedRecurrence::P(std::int64_t m, std::int64_t l) const {
  m = std::abs(m);
  l = std::abs(l);
  if (m > max_m_ || l > max_l_) throw DomainError("RotatedRecurrence::P: index out of table");
  return p_[static_cast<std::size_t>(m * (max_l_ + 1) + l)];
}

Complex RotatedRecurrence::Q(std::int64_t m, std::int64_t l) const {
  if (m < 0 || l < 0 || m > max_m_ || l > max_l_) {
    throw DomainError("RotatedRecurrence::Q: index out of table");
  }
  return q_[static_cast<std::size_t>(m * (max_l_ + 1) + l)];
}

namespace {

struct Rotated {
  std::int64_t m;
  std::int64_t l;
  bool odd;
  double sign;
};

Rotated rotate(const LatticePoint& n) {
  const auto [n1, n2] = folded(n);
  Rotated r{};
  r.odd = (n1 + n2) % 2 != 0;
  if (r.odd) {
    r.m = (n1 + n2 - 1) / 2;
    r.l = (n1 - n2 - 1) / 2;
  } else {
    r.m = (n1 + n2) / 2;
    r.l = (n1 - n2) / 2;
  }
  r.sign = sign_pow(r.m + r.l);
  return r;
}

}  // namespace

namespace {

// Diagonal values with magnitudes inflated so that kRounding * mag also covers
// their own error bound.
std::vector<Tracked> tracked_diagonal(Complex z, std::int64_t max_m, double tol) {
  std::vector<Tracked> out;
  for (const DiagValue& d : diag_p0_table(z, max_m, tol)) {
    out.push_back({d.value, std::abs(d.value) + d.err / kRounding});
  }
  return out;
}

std::vector<Complex> values_of(std::span<const Tracked> t) {
  std::vector<Complex> out;
  for (const Tracked& x : t) out.push_back(x.v);
  return out;
}

// Magnitude bound for the recursion, mirroring RotatedRecurrence.
double recurrence_magnitude(Complex z, std::span<const Tracked> p0, const Rotated& r) {
  const std::int64_t rows = r.m + 1;
  const std::int64_t cols = r.l + 1;
  const double w4 = std::abs((z - 4.0) / 4.0);
  const double quarter_sq = std::abs((z - 4.0) * (z - 4.0) / 4.0);
  auto mult = [](std::int64_t k) { return k == 0 ? 1.0 : 2.0; };
  std::vector<double> p(static_cast<std::size_t>(rows * cols), 0.0);
  auto at = [cols](std::int64_t m, std::int64_t l) { return static_cast<std::size_t>(m * cols + l); };
  for (std::int64_t m = 0; m < rows; ++m) {
    for (std::int64_t l = 0; l < cols; ++l) {
      double s = 0.0;
      for (std::int64_t mu = 0; mu < m; ++mu) {
        for (std::int64_t nu = 0; nu < l; ++nu) s += mult(mu) * mult(nu) * static_cast<double>((m - mu) * (l - nu)) * p[at(mu, nu)];
      }
      p[at(m, l)] = w4 * static_cast<double>(m * l) + p0[0].mag + p0[static_cast<std::size_t>(m)].mag +
                    p0[static_cast<std::size_t>(l)].mag + quarter_sq * s;
    }
  }
  if (!r.odd) return p[at(r.m, r.l)];
  double s = 0.0;
  for (std::int64_t mu = 0; mu <= r.m; ++mu) {
    for (std::int64_t nu = 0; nu <= r.l; ++nu) s += mult(mu) * mult(nu) * p[at(mu, nu)];
  }
  return 0.25 + w4 * s;
}

}  // namespace

// err_estimate is a running bound: the finite sums cancel heavily once
// |z(8 - z)| > 16 and |z - 4| > 4, which this makes visible.
GreenValue green_2d_endpoint(Complex z, const LatticePoint& n, double tol) {
  require_off_spectrum_2d(z);
  const Rotated r = rotate(n);
  const std::vector<Tracked> p0 = tracked_diagonal(z, std::max(r.m, r.l), tol);
  const Tracked t = r.odd ? endpoint_Q_tracked(z, r.m, r.l, p0) : endpoint_P_tracked(z, r.m, r.l, p0);
  GreenValue out;
  out.representation = Representation::endpoint_2d;
  out.value = r.sign * t.v;
  out.terms_used = r.m + 1;
  out.err_estimate = kRounding * t.mag;
  return out;
}

GreenValue green_2d_recurrence(Complex z, const LatticePoint& n, double tol) {
  require_off_spectrum_2d(z);
  const Rotated r = rotate(n);
  const std::vector<Tracked> p0 = tracked_diagonal(z, std::max(r.m, r.l), tol);
  const RotatedRecurrence rec(z, values_of(p0), r.m, r.l);
  GreenValue out;
  out.representation = Representation::recurrence_2d;
  out.value = r.sign * (r.odd ? rec.Q(r.m, r.l) : rec.P(r.m, r.l));
  out.terms_used = (r.m + 1) * (r.l + 1);
  out.err_estimate = kRounding * recurrence_magnitude(z, p0, r);
  return out;
}

}  // namespace latgreen
