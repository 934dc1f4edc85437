#include "latgreen/fundamental_solutions.hpp"

#include <cstdlib>
#include <numbers>
#include <sstream>

#include "latgreen/hypergeometric.hpp"

namespace latgreen {

namespace {

double to_double(const Rational& r) { return static_cast<double>(r); }

Rational pfq43_at_one(std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4,
                      HalfInt b1, HalfInt b2) {
  const PFQParams p{{HalfInt(a1), HalfInt(a2), HalfInt(a3), HalfInt(a4)}, {HalfInt(1), b1, b2}};
  if (!p.terminating_degree()) {
    throw Error("fundamental solution: 4F3(...; 1) does not terminate");
  }
  return eval_pfq_exact(p, Rational(1));
}

Rational pfq43_at_one(HalfInt a1, HalfInt a2, HalfInt a3, HalfInt a4, HalfInt b1, HalfInt b2) {
  const PFQParams p{{a1, a2, a3, a4}, {HalfInt(1), b1, b2}};
  if (!p.terminating_degree()) {
    throw Error("fundamental solution: 4F3(...; 1) does not terminate");
  }
  return eval_pfq_exact(p, Rational(1));
}

// sum_{j=1}^{k-1} 2/(2j-1) + 1/(2k-1)
Rational weighted_odd_harmonic(std::int64_t k) { return 2 * odd_harmonic(k - 1) + Rational(1, 2 * k - 1); }

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

FundSolValue real_value(Channels c) { return FundSolValue{std::move(c), Channels{}}; }

}  // namespace

double Channels::to_double() const {
  return latgreen::to_double(rational) + latgreen::to_double(inv_pi) / std::numbers::pi +
         latgreen::to_double(log2_inv_pi) * std::numbers::ln2 / std::numbers::pi;
}

Channels& Channels::operator+=(const Channels& o) {
  rational += o.rational;
  inv_pi += o.inv_pi;
  log2_inv_pi += o.log2_inv_pi;
  return *this;
}

Channels& Channels::operator-=(const Channels& o) {
  rational -= o.rational;
  inv_pi -= o.inv_pi;
  log2_inv_pi -= o.log2_inv_pi;
  return *this;
}

Channels& Channels::operator*=(const Rational& c) {
  rational *= c;
  inv_pi *= c;
  log2_inv_pi *= c;
  return *this;
}

std::string Channels::str() const {
  return rational_str(rational) + " + (" + rational_str(inv_pi) + ")/pi + (" +
         rational_str(log2_inv_pi) + ") log2/pi";
}

FundSolValue& FundSolValue::operator+=(const FundSolValue& o) {
  re += o.re;
  im += o.im;
  return *this;
}

FundSolValue& FundSolValue::operator-=(const FundSolValue& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

FundSolValue& FundSolValue::operator*=(const Rational& c) {
  re *= c;
  im *= c;
  return *this;
}

std::string FundSolValue::str() const {
  if (!has_imaginary()) return re.str();
  return "[" + re.str() + "] + i [" + im.str() + "]";
}

FundSolValue fundsol_h0(const LatticePoint& n) {
  if (n.dim() != 2) throw DomainError("fundsol_h0: expected a point of Z^2");
  const LatticePoint r = reduce_symmetry(n);
  const std::int64_t n1 = r[0];
  const std::int64_t n2 = r[1];
  const Rational sign = sign_pow(n1);  // (-1)^{max |n_j|}
  Channels c;

  if ((n1 + n2) % 2 == 0) {
    const std::int64_t a = (n1 + n2) / 2;
    const std::int64_t b = (n1 - n2) / 2;
    if (a > 0 && b > 0) {
      c.rational = -sign * Rational(a * b) *
                   pfq43_at_one(1 + a, 1 + b, 1 - b, 1 - a, kThreeHalves, kThreeHalves);
    }
    Rational s = 0;
    for (std::int64_t mu = 1; mu <= a; ++mu) {
      s += Rational(sign_pow(mu)) * weighted_odd_harmonic(mu) *
           pfq43_at_one(a + 1 - mu, mu - a, b, -b, kHalf, kHalf);
    }
    for (std::int64_t nu = 1; nu <= b; ++nu) {
      s += Rational(sign_pow(nu)) * weighted_odd_harmonic(nu) *
           pfq43_at_one(a, -a, b + 1 - nu, nu - b, kHalf, kHalf);
    }
    c.inv_pi = -sign * s;
    return real_value(c);
  }

  const std::int64_t A = n1 + n2;  // odd
  const std::int64_t B = n1 - n2;  // odd
  const HalfInt hA_plus = HalfInt::half(1 + A);
  const HalfInt hA_minus = HalfInt::half(1 - A);
  const HalfInt hB_plus = HalfInt::half(1 + B);
  const HalfInt hB_minus = HalfInt::half(1 - B);
  c.rational = sign / 4 * pfq43_at_one(hA_plus, hB_plus, hB_minus, hA_minus, kHalf, kHalf);

  Rational s = 0;
  const std::int64_t ma = (A - 1) / 2;
  for (std::int64_t mu = -ma; mu <= ma; ++mu) {
    const std::int64_t k = std::abs(mu);
    if (k == 0) continue;  // empty harmonic sum
    s += Rational(B) * Rational(sign_pow(mu)) * odd_harmonic(k) *
         pfq43_at_one(hA_plus + HalfInt(-k), HalfInt(k) + hA_minus, hB_plus, hB_minus, kHalf,
                      kThreeHalves);
  }
  const std::int64_t mb = (B - 1) / 2;
  for (std::int64_t nu = -mb; nu <= mb; ++nu) {
    const std::int64_t k = std::abs(nu);
    if (k == 0) continue;
    s += Rational(A) * Rational(sign_pow(nu)) * odd_harmonic(k) *
         pfq43_at_one(hA_plus, hA_minus, hB_plus + HalfInt(-k), HalfInt(k) + hB_minus, kHalf,
                      kThreeHalves);
  }
  c.inv_pi = sign * s;
  return real_value(c);
}

FundSolValue fundsol_embedded(const LatticePoint& n) {
  if (n.dim() != 2) throw DomainError("fundsol_embedded: expected a point of Z^2");
  const LatticePoint r = reduce_symmetry(n);
  const std::int64_t hi = r[0];
  const std::int64_t lo = r[1];
  FundSolValue v;
  v.re.rational = Rational(sign_pow(hi) - sign_pow(lo), 8);
  if ((hi + lo) % 2 == 0) {
    // ((-1)^{n1} + (-1)^{n2}) / (2 pi) = (-1)^{n1} / pi for even |n|
    const Rational w = sign_pow(hi);
    v.im.log2_inv_pi = w;
    v.im.inv_pi = -w * (odd_harmonic((hi + lo) / 2) + odd_harmonic((hi - lo) / 2));
  }
  return v;
}

FundSolValue fundsol_dalembertian(const LatticePoint& n) {
  if (n.dim() != 2) throw DomainError("fundsol_dalembertian: expected a point of Z^2");
  return fundsol_embedded(n) * Rational(sign_pow(n[0]));
}

FundSolValue fundsol_h0_minus8(const LatticePoint& n) {
  if (n.dim() != 2) throw DomainError("fundsol_h0_minus8: expected a point of Z^2");
  return fundsol_h0(n) * Rational(-sign_pow(n[0] + n[1]));
}

std::string to_string(FundSolOperator op) {
  switch (op) {
    case FundSolOperator::h0:
      return "h0";
    case FundSolOperator::h0_minus4:
      return "h0-4";
    case FundSolOperator::dalembertian:
      return "dalembertian";
    case FundSolOperator::h0_minus8:
      return "h0-8";
  }
  return "?";
}

FundSolOperator fundsol_operator_from_string(const std::string& s) {
  if (s == "h0") return FundSolOperator::h0;
  if (s == "h0-4") return FundSolOperator::h0_minus4;
  if (s == "dalembertian") return FundSolOperator::dalembertian;
  if (s == "h0-8") return FundSolOperator::h0_minus8;
  throw DomainError("unknown operator '" + s + "' (expected h0, h0-4, dalembertian, h0-8)");
}

FundSolValue fundsol(FundSolOperator op, const LatticePoint& n) {
  switch (op) {
    case FundSolOperator::h0:
      return fundsol_h0(n);
    case FundSolOperator::h0_minus4:
      return fundsol_embedded(n);
    case FundSolOperator::dalembertian:
      return fundsol_dalembertian(n);
    case FundSolOperator::h0_minus8:
      return fundsol_h0_minus8(n);
  }
  throw DomainError("unknown operator");
}

FundSolValue apply_stencil(FundSolOperator op, const FundSolFn& u, const LatticePoint& n) {
  if (n.dim() != 2) throw DomainError("apply_stencil: expected a point of Z^2");
  const LatticePoint e1 = LatticePoint::unit(2, 0);
  const LatticePoint e2 = LatticePoint::unit(2, 1);
  const FundSolValue horizontal = u(n + e1) + u(n - e1);
  const FundSolValue vertical = u(n + e2) + u(n - e2);
  switch (op) {
    case FundSolOperator::h0:
      return u(n) * Rational(4) - horizontal - vertical;
    case FundSolOperator::h0_minus4:
      return FundSolValue{} - horizontal - vertical;
    case FundSolOperator::dalembertian:
      return horizontal - vertical;
    case FundSolOperator::h0_minus8:
      return u(n) * Rational(-4) - horizontal - vertical;
  }
  throw DomainError("unknown operator");
}

FundSolValue stencil_residual(FundSolOperator op, const LatticePoint& n) {
  return apply_stencil(op, [op](const LatticePoint& m) { return fundsol(op, m); }, n);
}

}  // namespace latgreen
