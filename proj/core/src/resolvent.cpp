#include "latgreen/resolvent.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "scaled.hpp"
#include "shell_sum.hpp"

namespace latgreen {

namespace {

void require_off_spectrum(const SpectralPoint& sp) {
  if (sp.in_spectrum()) {
    throw RegionError("z in " + sp.spectrum_str() + ": the kernel is defined off the spectrum");
  }
}

void require_dim(const LatticePoint& n, std::size_t d, const char* what) {
  if (n.dim() != d) {
    throw DomainError(std::string(what) + ": expected a point of Z^" + std::to_string(d));
  }
}

}  // namespace

GreenValue green_laurent(int d, Complex z, const LatticePoint& n, double tol) {
  const SpectralPoint sp(z, d);
  require_dim(n, static_cast<std::size_t>(d), "green_laurent");
  if (!sp.outside_disk()) {
    throw RegionError("laurent: requires |" + std::to_string(2 * d) + " - z| > " +
                      std::to_string(2 * d));
  }
  const Complex u = 1.0 / (2.0 * d - z);
  const Complex u2 = u * u;
  const std::int64_t abs_n = n.l1();

  std::vector<detail::ShellSum::Ratio> ratios;
  std::vector<std::optional<std::int64_t>> bounds(d);
  double log_prefactor = ln_factorial(abs_n);
  for (int j = 0; j < d; ++j) {
    const auto nj = static_cast<double>(std::abs(n[j]));
    log_prefactor -= ln_factorial(std::abs(n[j]));
    // u^{2a} / (a! (a + |n_j|)!) up to the constant 1/|n_j|!
    ratios.emplace_back([u2, nj](std::int64_t a) {
      const double ad = static_cast<double>(a);
      return u2 / ((ad + 1.0) * (ad + 1.0 + nj));
    });
  }
  const auto abs_nd = static_cast<double>(abs_n);
  // (2s + |n|)! up to the constant |n|!
  detail::ShellSum series(std::move(ratios), std::move(bounds),
                          [abs_nd](std::int64_t s) {
                            const double sd = static_cast<double>(s);
                            return Complex((2.0 * sd + abs_nd + 1.0) * (2.0 * sd + abs_nd + 2.0));
                          },
                          std::nullopt);
  const double rate = std::norm(2.0 * d * u);  // (2d / |2d - z|)^2
  const SeriesValue sv = detail::run_shells(series, tol, 200000, "laurent", rate);

  detail::Scaled pre = detail::Scaled::from_log(log_prefactor);
  pre *= std::pow(u, static_cast<double>(abs_n + 1));
  const Complex scale = pre.value();

  GreenValue out;
  out.value = scale * sv.value;
  out.representation = Representation::laurent;
  out.terms_used = sv.terms_used;
  out.err_estimate = std::abs(scale) * sv.err_estimate;
  return out;
}

GreenValue green_laurent_2d(Complex z, const LatticePoint& n, double tol) {
  const SpectralPoint sp(z, 2);
  require_dim(n, 2, "green_laurent_2d");
  if (!sp.outside_disk()) throw RegionError("laurent2d: requires |4 - z| > 4");

  const std::int64_t n1 = std::abs(n[0]);
  const std::int64_t n2 = std::abs(n[1]);
  const std::int64_t abs_n = n1 + n2;
  const Complex u = 1.0 / (4.0 - z);
  const Complex u2 = u * u;

  // t_0 = |n|! / (|n1|! |n2|!) u^{|n|+1}
  detail::Scaled term =
      detail::Scaled::from_log(ln_factorial(abs_n) - ln_factorial(n1) - ln_factorial(n2));
  term *= std::pow(u, static_cast<double>(abs_n + 1));

  // Normalized terms stay O(1) relative to the first; accumulate the ratio
  // product in scaled form and add in double.
  const Complex first = term.value();
  Complex sum = first;
  detail::Scaled rel(1.0);
  double last = std::abs(first);
  int quiet = 0;
  std::int64_t k = 0;
  const double dn = static_cast<double>(abs_n);
  // terms decay like (4 / |4 - z|)^{2k}; stop on the geometric tail bound
  const double rate = std::norm(4.0 * u);
  const double tail_factor = std::max(1.0, rate / (1.0 - rate));
  for (; k < 1000000; ++k) {
    const double kd = static_cast<double>(k);
    const double a = (2.0 * kd + dn + 1.0) * (2.0 * kd + dn + 2.0);
    const double b = (kd + 1.0 + static_cast<double>(n1)) * (kd + 1.0 + static_cast<double>(n2)) *
                     (dn + kd + 1.0) * (kd + 1.0);
    rel *= u2 * (a / b) * a;
    const Complex t = first * rel.value();
    sum += t;
    last = tail_factor * std::abs(t);
    quiet = (last <= tol * std::abs(sum)) ? quiet + 1 : 0;
    if (quiet >= detail::kQuietShells) break;
  }
  if (quiet < detail::kQuietShells) throw ConvergenceError("laurent2d: no convergence", last);

  GreenValue out;
  out.value = sum;
  out.representation = Representation::laurent_2d;
  out.terms_used = k + 2;
  out.err_estimate = last;
  return out;
}

GreenValue green_1d(Complex z, std::int64_t n) {
  const SpectralPoint sp(z, 1);
  require_off_spectrum(sp);
  const Complex s = resolvent_sqrt_1d(z);
  const Complex base = (2.0 - z - s) / 2.0;
  GreenValue out;
  out.value = std::pow(base, static_cast<double>(std::abs(n))) / s;
  if (n == 0) out.value = 1.0 / s;
  out.representation = Representation::closed_1d;
  out.terms_used = 1;
  return out;
}

GreenValue green_1d_threshold0(Complex z, std::int64_t n, double tol) {
  require_finite(z, "thresh0-1d");
  if ((z.imag() == 0.0 && z.real() >= 0.0) || std::abs(z) >= 4.0) {
    throw RegionError("thresh0-1d: requires z off [0, inf) with |z| < 4");
  }
  const double abs_n = static_cast<double>(std::abs(n));
  const Complex w = z / 4.0;
  // Analytic part: the upper parameter 1 - |n| makes this a finite sum.
  const PFQParams analytic{{HalfInt(1 + n), HalfInt(1 - n)}, {kThreeHalves}};
  const PFQParams singular{{HalfInt::half(1 + 2 * n), HalfInt::half(1 - 2 * n)}, {kHalf}};
  // The two parts are O(|n|) and cancel to a value that decays geometrically
  // in |n|; sum the series far below tol so the difference stays accurate.
  const double series_tol = std::min(tol, kDefaultTol) * 1e-6;
  const SeriesValue a = eval_pfq(analytic, w, series_tol);
  const SeriesValue s = eval_pfq(singular, w, series_tol);
  const Complex pref = 1.0 / (2.0 * principal_sqrt(-z));

  GreenValue out;
  out.value = -abs_n / 2.0 * a.value + pref * s.value;
  out.representation = Representation::threshold0_1d;
  out.terms_used = a.terms_used + s.terms_used;
  out.err_estimate = std::abs(pref) * s.err_estimate;
  return out;
}

GreenValue green_1d_threshold4(Complex z, std::int64_t n, double tol) {
  require_finite(z, "thresh4-1d");
  if ((z.imag() == 0.0 && z.real() <= 4.0) || std::abs(z - 4.0) >= 4.0) {
    throw RegionError("thresh4-1d: requires z off (-inf, 4] with |z - 4| < 4");
  }
  const double abs_n = static_cast<double>(std::abs(n));
  const double sign = sign_pow(n + 1);
  const Complex w = (4.0 - z) / 4.0;
  const PFQParams analytic{{HalfInt(1 + n), HalfInt(1 - n)}, {kThreeHalves}};
  const PFQParams singular{{HalfInt::half(1 + 2 * n), HalfInt::half(1 - 2 * n)}, {kHalf}};
  // The two parts are O(|n|) and cancel to a value that decays geometrically
  // in |n|; sum the series far below tol so the difference stays accurate.
  const double series_tol = std::min(tol, kDefaultTol) * 1e-6;
  const SeriesValue a = eval_pfq(analytic, w, series_tol);
  const SeriesValue s = eval_pfq(singular, w, series_tol);
  const Complex pref = sign / (2.0 * principal_sqrt(z - 4.0));

  GreenValue out;
  out.value = -sign * abs_n / 2.0 * a.value + pref * s.value;
  out.representation = Representation::threshold4_1d;
  out.terms_used = a.terms_used + s.terms_used;
  out.err_estimate = std::abs(pref) * s.err_estimate;
  return out;
}

Rational pochhammer_telescoping(std::int64_t p, std::int64_t q, HalfInt r, std::int64_t k) {
  if (p > q) throw DomainError("pochhammer_telescoping: requires p <= q");
  if (k < 0) throw DomainError("pochhammer_telescoping: requires k >= 0");
  const Rational rr = r.to_rational();
  return (pochhammer(rr + q, k + 1) - pochhammer(rr + (p - 1), k + 1)) / Rational(k + 1);
}

GreenValue green_auto(int d, Complex z, const LatticePoint& n, double tol) {
  const SpectralPoint sp(z, d);
  require_dim(n, static_cast<std::size_t>(d), "green_auto");
  require_off_spectrum(sp);
  if (d == 1) return green_1d(z, n[0]);
  if (d >= 3) {
    if (!sp.outside_disk()) {
      throw RegionError("unsupported region: for d >= 3 only |" + std::to_string(2 * d) +
                        " - z| > " + std::to_string(2 * d) + " is covered");
    }
    return green_laurent(d, z, n, tol);
  }

  // d = 2. The Laurent series converges like (4/|4-z|)^2 per term.
  constexpr double kFastLaurent = 0.9;
  const double laurent_rate = std::pow(4.0 / std::abs(4.0 - z), 2);
  if (sp.outside_disk() && laurent_rate <= kFastLaurent) return green_laurent_2d(z, n, tol);
  if (std::abs(z - 4.0) < 4.0 && z.imag() != 0.0) return green_2d_embedded(z, n, tol);
  if (std::abs(z * (8.0 - z)) < 16.0 && z.real() != 4.0) return green_2d_endpoint(z, n, tol);
  if (sp.outside_disk()) return green_laurent_2d(z, n, tol);
  throw RegionError("unsupported region: no representation covers z for d = 2");
}

GreenValue green_with(Representation rep, int d, Complex z, const LatticePoint& n, double tol) {
  auto need = [&](int want) {
    if (d != want) {
      throw RegionError(to_string(rep) + ": representation requires d = " + std::to_string(want));
    }
    require_dim(n, static_cast<std::size_t>(d), to_string(rep).c_str());
  };
  switch (rep) {
    case Representation::closed_1d:
      need(1);
      return green_1d(z, n[0]);
    case Representation::threshold0_1d:
      need(1);
      return green_1d_threshold0(z, n[0], tol);
    case Representation::threshold4_1d:
      need(1);
      return green_1d_threshold4(z, n[0], tol);
    case Representation::laurent:
      return green_laurent(d, z, n, tol);
    case Representation::laurent_2d:
      need(2);
      return green_laurent_2d(z, n, tol);
    case Representation::embedded_2d:
      need(2);
      return green_2d_embedded(z, n, tol);
    case Representation::embedded_2d_boundary:
      need(2);
      if (z != Complex(4.0, 0.0)) throw RegionError("embedded2d-boundary: requires z = 4");
      return green_2d_embedded_boundary(n);
    case Representation::endpoint_2d:
      need(2);
      return green_2d_endpoint(z, n, tol);
    case Representation::recurrence_2d:
      need(2);
      return green_2d_recurrence(z, n, tol);
    case Representation::quadrature:
    case Representation::bessel_laplace:
      break;
  }
  throw DomainError(to_string(rep) + " is an oracle, not a series representation");
}

std::vector<Representation> applicable_representations(int d, Complex z) {
  std::vector<Representation> out;
  const SpectralPoint sp(z, d);
  if (sp.in_spectrum() || !std::isfinite(z.real()) || !std::isfinite(z.imag())) return out;
  const bool real_axis = z.imag() == 0.0;
  if (sp.outside_disk()) out.push_back(Representation::laurent);
  if (d == 1) {
    out.push_back(Representation::closed_1d);
    if (std::abs(z) < 4.0 && !(real_axis && z.real() >= 0.0)) {
      out.push_back(Representation::threshold0_1d);
    }
    if (std::abs(z - 4.0) < 4.0 && !(real_axis && z.real() <= 4.0)) {
      out.push_back(Representation::threshold4_1d);
    }
  } else if (d == 2) {
    if (sp.outside_disk()) out.push_back(Representation::laurent_2d);
    const bool thresh4 = std::abs(z - 4.0) < 4.0 && !real_axis;
    if (thresh4) out.push_back(Representation::embedded_2d);
    // The endpoint sums are exact for any z off [0, 8] but cancel heavily
    // outside these two regions; there they are not offered as a method.
    const bool endpoint = std::abs(z * (8.0 - z)) < 16.0 && z.real() != 4.0;
    if (endpoint || std::abs(z - 4.0) < 4.0) {
      out.push_back(Representation::endpoint_2d);
      out.push_back(Representation::recurrence_2d);
    }
  }
  return out;
}

Complex helmholtz_residual(const KernelFn& g, Complex z, const LatticePoint& n) {
  const std::size_t d = n.dim();
  Complex r = (2.0 * static_cast<double>(d) - z) * g(n);
  for (std::size_t j = 0; j < d; ++j) {
    const LatticePoint e = LatticePoint::unit(d, j);
    r -= g(n + e) + g(n - e);
  }
  return r;
}

}  // namespace latgreen
