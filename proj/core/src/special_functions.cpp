#include "latgreen/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace latgreen {

std::string HalfInt::str() const {
  std::ostringstream os;
  if (is_integer()) {
    os << integer_value();
  } else {
    os << twice_ << "/2";
  }
  return os.str();
}

Rational pochhammer(HalfInt q, std::int64_t j) { return pochhammer(q.to_rational(), j); }

Rational pochhammer(const Rational& q, std::int64_t j) {
  if (j < 0) throw DomainError("pochhammer: negative length");
  Rational result = 1;
  Rational factor = q;
  for (std::int64_t i = 0; i < j; ++i) {
    result *= factor;
    if (result == 0) break;
    factor += 1;
  }
  return result;
}

Complex pochhammer_f(Complex q, std::int64_t j) {
  if (j < 0) throw DomainError("pochhammer_f: negative length");
  Complex result = 1.0;
  for (std::int64_t i = 0; i < j; ++i) {
    result *= q + static_cast<double>(i);
    if (result == 0.0) return result;
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
      throw DomainError("pochhammer_f: overflow");
    }
  }
  return result;
}

double digamma(HalfInt x) {
  if (x.is_nonpositive_integer()) {
    throw DomainError("digamma: pole at " + x.str());
  }
  if (x.is_integer()) {
    // psi(1+m) = -gamma + sum_{k=1}^m 1/k
    const std::int64_t m = x.integer_value() - 1;
    double h = 0.0;
    for (std::int64_t k = m; k >= 1; --k) h += 1.0 / static_cast<double>(k);
    return -kEulerGamma + h;
  }
  // x = 1/2 + m; psi(1/2 - m) = psi(1/2 + m).
  std::int64_t m = (x.twice_value() - 1) / 2;
  if (m < 0) m = -m;
  double h = 0.0;
  for (std::int64_t k = m; k >= 1; --k) h += 1.0 / static_cast<double>(2 * k - 1);
  return -kEulerGamma - 2.0 * std::numbers::ln2 + 2.0 * h;
}

void require_finite(Complex w, const char* what) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

namespace {

bool on_negative_real_axis(Complex w) { return w.imag() == 0.0 && w.real() <= 0.0; }

}  // namespace

Complex principal_sqrt(Complex w) {
  require_finite(w, "principal_sqrt");
  if (on_negative_real_axis(w) && w.real() < 0.0) {
    throw DomainError("principal_sqrt: argument on the branch cut (-inf, 0)");
  }
  return std::sqrt(w);
}

Complex principal_log(Complex w) {
  require_finite(w, "principal_log");
  if (on_negative_real_axis(w)) {
    throw DomainError("principal_log: argument on the branch cut (-inf, 0]");
  }
  return std::log(w);
}

Complex resolvent_sqrt_1d(Complex z) {
  require_finite(z, "resolvent_sqrt_1d");
  if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 4.0) {
    throw DomainError("resolvent_sqrt_1d: z in [0, 4]");
  }
  if (z.imag() == 0.0) {
    const double x = z.real();
    // Both factors flip sign across (4, inf), so the product is continuous
    // there; signed zeros would otherwise pick inconsistent sides.
    const double r = std::sqrt(x * (x - 4.0));
    return x < 0.0 ? Complex(r, 0.0) : Complex(-r, 0.0);
  }
  return std::sqrt(-z) * std::sqrt(4.0 - z);
}

double ln_factorial(std::int64_t k) {
  if (k < 0) throw DomainError("ln_factorial: negative argument");
  if (k < 2) return 0.0;
  return std::lgamma(static_cast<double>(k) + 1.0);
}

Rational odd_harmonic(std::int64_t m) {
  Rational s = 0;
  for (std::int64_t k = 1; k <= m; ++k) s += Rational(1, 2 * k - 1);
  return s;
}

}  // namespace latgreen
