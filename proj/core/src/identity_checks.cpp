#include "latgreen/identity_checks.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "latgreen/hypergeometric.hpp"
#include "latgreen/resolvent.hpp"

namespace latgreen {

namespace {

BigInt factorial(std::int64_t k) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= k; ++i) f *= i;
  return f;
}

Rational rpow(std::int64_t base, std::int64_t e) {
  BigInt p = 1;
  for (std::int64_t i = 0; i < e; ++i) p *= base;
  return Rational(p);
}

// sum_{|a|=j} (-1)^{a1} / (a1! a2!) (1/2+n1)_{a1} (1/2-n1)_{a1} (1/2+n2)_{a2} (1/2-n2)_{a2}
Rational shell_sum(std::int64_t j, std::int64_t n1, std::int64_t n2) {
  Rational s = 0;
  for (std::int64_t a1 = 0; a1 <= j; ++a1) {
    const std::int64_t a2 = j - a1;
    Rational t = pochhammer(HalfInt::half(1 + 2 * n1), a1) * pochhammer(HalfInt::half(1 - 2 * n1), a1) *
                 pochhammer(HalfInt::half(1 + 2 * n2), a2) * pochhammer(HalfInt::half(1 - 2 * n2), a2);
    t /= Rational(factorial(a1) * factorial(a2));
    s += (a1 % 2 == 0) ? t : Rational(-t);
  }
  return s;
}

Complex f21(HalfInt a, HalfInt b, HalfInt c, Complex x, double tol) {
  return eval_pfq(PFQParams{{a, b}, {c}}, x, tol).value;
}

Complex f43(std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4, HalfInt b1,
            HalfInt b2, Complex x) {
  const PFQParams p{{HalfInt(a1), HalfInt(a2), HalfInt(a3), HalfInt(a4)}, {HalfInt(1), b1, b2}};
  return eval_pfq(p, x, 0.0).value;
}

Complex fb2(HalfInt a1, HalfInt a2, HalfInt b1, HalfInt b2, Complex w, double tol) {
  const LauricellaB p{{a1, a2}, {b1, b2}, HalfInt(1)};
  const std::array<Complex, 2> ws{w, w};
  return eval_lauricella_fb(p, ws, tol).value;
}

double sgn(std::int64_t k) { return sign_pow(k); }

HalfInt half_plus(std::int64_t k) { return HalfInt::half(1 + 2 * k); }    // 1/2 + k
HalfInt half_minus(std::int64_t k) { return HalfInt::half(1 - 2 * k); }   // 1/2 - k

}  // namespace

bool check_binomial_convolution(std::int64_t k, const LatticePoint& n) {
  if (n.dim() != 2) throw DomainError("check_binomial_convolution: expected a point of Z^2");
  if (k < 0) throw DomainError("check_binomial_convolution: k must be >= 0");
  const std::int64_t n1 = std::abs(n[0]);
  const std::int64_t n2 = std::abs(n[1]);
  const std::int64_t abs_n = n1 + n2;
  Rational lhs = 0;
  const BigInt top = factorial(2 * k + abs_n);
  for (std::int64_t a1 = 0; a1 <= k; ++a1) {
    const std::int64_t a2 = k - a1;
    lhs += Rational(top, factorial(a1) * factorial(a2) * factorial(a1 + n1) * factorial(a2 + n2));
  }
  const Rational rhs(top * top,
                     factorial(k + n1) * factorial(k + n2) * factorial(abs_n + k) * factorial(k));
  return lhs == rhs;
}

bool check_threshold_shell_identities(std::int64_t k, const LatticePoint& n) {
  if (n.dim() != 2) throw DomainError("check_threshold_shell_identities: expected a point of Z^2");
  if (k < 0) throw DomainError("check_threshold_shell_identities: k must be >= 0");
  const std::int64_t n1 = n[0];
  const std::int64_t n2 = n[1];

  const Rational even_rhs = rpow(4, 2 * k) / Rational(factorial(2 * k)) *
                            pochhammer(HalfInt::half(1 + n1 + n2), k) *
                            pochhammer(HalfInt::half(1 + n1 - n2), k) *
                            pochhammer(HalfInt::half(1 - n1 + n2), k) *
                            pochhammer(HalfInt::half(1 - n1 - n2), k);
  const Rational odd_rhs = rpow(4, 2 * k + 1) / Rational(factorial(2 * k + 1)) *
                           pochhammer(HalfInt::half(n1 + n2), k + 1) *
                           pochhammer(HalfInt::half(n1 - n2), k + 1) *
                           pochhammer(HalfInt::half(2 - n1 + n2), k) *
                           pochhammer(HalfInt::half(2 - n1 - n2), k);
  return shell_sum(2 * k, n1, n2) == even_rhs && shell_sum(2 * k + 1, n1, n2) == odd_rhs;
}

IdentityResidual check_endpoint_singular_identities(double w, std::int64_t m, std::int64_t l,
                                                    double tol) {
  const double x = w * (2.0 - w);
  if (!(std::abs(w) < 1.0) || !(std::abs(x) < 1.0)) {
    throw DomainError("endpoint identities: need |w| < 1 and |w(2-w)| < 1");
  }
  const double series_tol = std::min(1e-14, tol * 1e-3);
  const Complex y = (w - 1.0) * (w - 1.0);
  const double sign = sign_pow(m + l);
  const std::int64_t am = std::abs(m);
  const std::int64_t al = std::abs(l);
  auto f21_pm = [&](std::int64_t k) { return f21(half_plus(k), half_minus(k), HalfInt(1), x, series_tol); };
  // 2F1(k - 1/2, 3/2 - k; 1; x)
  auto f21_shift = [&](std::int64_t k) {
    return f21(HalfInt::half(2 * k - 1), HalfInt::half(3 - 2 * k), HalfInt(1), x, series_tol);
  };

  IdentityResidual out;
  {
    const Complex lhs = sign * fb2(half_plus(m + l), half_plus(m - l), half_minus(m + l),
                                   half_minus(m - l), w, series_tol);
    Complex rhs = f21_pm(0) * f43(m, -m, l, -l, kHalf, kHalf, y);
    for (std::int64_t mu = 1; mu <= am; ++mu) {
      rhs += sgn(mu) * (f21_pm(mu) + f21_shift(mu)) *
             f43(1 + am - mu, mu - am, l, -l, kHalf, kHalf, y);
    }
    for (std::int64_t nu = 1; nu <= al; ++nu) {
      rhs += sgn(nu) * (f21_pm(nu) + f21_shift(nu)) *
             f43(m, -m, 1 + al - nu, nu - al, kHalf, kHalf, y);
    }
    out.even = std::abs(lhs - rhs);
  }
  if (m >= 0 && l >= 0) {
    const Complex lhs = sign * fb2(HalfInt::half(3 + 2 * (m + l)), half_plus(m - l),
                                   HalfInt::half(-1 - 2 * (m + l)), half_minus(m - l), w, series_tol);
    const double dm = static_cast<double>(2 * m + 1);
    const double dl = static_cast<double>(2 * l + 1);
    Complex rhs = dm * dl * (w - 1.0) * f21_pm(0) *
                  f43(1 + m, -m, 1 + l, -l, kThreeHalves, kThreeHalves, y);
    Complex s = 0.0;
    for (std::int64_t mu = -m; mu <= m; ++mu) {
      const std::int64_t a = std::abs(mu);
      s += sgn(mu) * f21_pm(a) * f43(1 + m - a, a - m, 1 + l, -l, kHalf, kThreeHalves, y);
    }
    rhs -= dl * (w - 1.0) * s;
    s = 0.0;
    for (std::int64_t nu = -l; nu <= l; ++nu) {
      const std::int64_t a = std::abs(nu);
      s += sgn(nu) * f21_pm(a) * f43(1 + m, -m, 1 + l - a, a - l, kHalf, kThreeHalves, y);
    }
    rhs -= dm * (w - 1.0) * s;
    out.odd = std::abs(lhs - rhs);
  }
  out.pass = out.even <= tol && out.odd <= tol;
  return out;
}

double check_singular_part_1d(Complex z, std::int64_t n, int q) {
  if (q != 0 && q != 1) throw DomainError("check_singular_part_1d: q must be 0 or 1");
  const GreenValue g = green_1d(z, n);
  const LauricellaB fb{{half_plus(n)}, {half_minus(n)}, kHalf};
  const double abs_n = static_cast<double>(std::abs(n));
  const PFQParams analytic{{HalfInt(1 + n), HalfInt(1 - n)}, {kThreeHalves}};
  if (q == 0) {
    if ((z.imag() == 0.0 && z.real() >= 0.0) || std::abs(z) >= 4.0) {
      throw RegionError("singular part q = 0: requires |z| < 4, z off [0, 4]");
    }
    const std::array<Complex, 1> w{z / 4.0};
    const Complex sing = eval_lauricella_fb(fb, w).value / (2.0 * principal_sqrt(-z));
    const Complex a = -abs_n / 2.0 * eval_pfq(analytic, z / 4.0).value;
    return std::abs(g.value - sing - a);
  }
  if ((z.imag() == 0.0 && z.real() <= 4.0) || std::abs(z - 4.0) >= 4.0) {
    throw RegionError("singular part q = 1: requires |z - 4| < 4, z off [0, 4]");
  }
  const double s = sign_pow(n + 1);
  const std::array<Complex, 1> w{(4.0 - z) / 4.0};
  const Complex sing = s * eval_lauricella_fb(fb, w).value / (2.0 * principal_sqrt(z - 4.0));
  const Complex a = -s * abs_n / 2.0 * eval_pfq(analytic, (4.0 - z) / 4.0).value;
  return std::abs(g.value - sing - a);
}

CutJump check_singular_part_2d(double x, const LatticePoint& n, int q, double delta) {
  if (n.dim() != 2) throw DomainError("check_singular_part_2d: expected a point of Z^2");
  if (q == 1) {
    throw DomainError(
        "check_singular_part_2d: q = 1 is covered by check_threshold_shell_identities");
  }
  if (q != 0 && q != 2) throw DomainError("check_singular_part_2d: q must be 0 or 2");
  if (!(delta > 0.0)) throw DomainError("check_singular_part_2d: delta must be > 0");
  const double center = 4.0 * q;
  if (std::abs(Complex(x - center, delta)) >= 4.0) {
    throw RegionError("check_singular_part_2d: x +- i delta must lie in |z - " +
                      std::to_string(4 * q) + "| < 4");
  }
  const LauricellaB fb{{half_plus(n[0]), half_plus(n[1])}, {half_minus(n[0]), half_minus(n[1])},
                       HalfInt(1)};
  auto singular = [&](Complex z) {
    if (q == 0) {
      const std::array<Complex, 2> w{z / 4.0, z / 4.0};
      return -principal_log(-z) / (4.0 * std::numbers::pi) * eval_lauricella_fb(fb, w).value;
    }
    const std::array<Complex, 2> w{(8.0 - z) / 4.0, (8.0 - z) / 4.0};
    return sgn(n.l1()) * principal_log(z - 8.0) / (4.0 * std::numbers::pi) *
           eval_lauricella_fb(fb, w).value;
  };
  const Complex up(x, delta);
  const Complex down(x, -delta);
  const Complex g_up = green_auto(2, up, n).value;
  const Complex g_down = green_auto(2, down, n).value;
  CutJump out;
  out.raw = std::abs(g_up - g_down);
  out.subtracted = std::abs((g_up - singular(up)) - (g_down - singular(down)));
  return out;
}

}  // namespace latgreen
