#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "latgreen/errors.hpp"

namespace latgreen {

using Complex = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286;

/// An exact number of the form k/2 with k an integer.
///
/// Pochhammer parameters in the lattice kernel formulas are all of this form
/// (for example 1/2 + n or (1 + n1 - n2)/2), so keeping them exact lets the
/// series evaluators detect termination without floating comparisons.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t value) : twice_(2 * value) {}  // NOLINT implicit

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  /// (numerator)/2, e.g. HalfInt::half(1 + n1 - n2).
  static constexpr HalfInt half(std::int64_t numerator) { return from_twice(numerator); }

  constexpr std::int64_t twice_value() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_nonpositive_integer() const { return is_integer() && twice_ <= 0; }
  /// Only meaningful when is_integer().
  constexpr std::int64_t integer_value() const { return twice_ / 2; }

  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  Rational to_rational() const { return Rational(BigInt(twice_), BigInt(2)); }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string str() const;

 private:
  std::int64_t twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);
inline constexpr HalfInt kThreeHalves = HalfInt::from_twice(3);

/// Rising factorial (q)_j = q (q+1) ... (q+j-1), exactly.
Rational pochhammer(HalfInt q, std::int64_t j);
Rational pochhammer(const Rational& q, std::int64_t j);

/// Floating rising factorial. Throws DomainError if the product overflows.
Complex pochhammer_f(Complex q, std::int64_t j);

/// Digamma function at a half-integer argument.
///
/// Uses psi(1+m) = -gamma + H_m and psi(1/2+m) = -gamma - 2 log 2 + 2 sum 1/(2k-1),
/// with psi(1/2-m) = psi(1/2+m) for negative half-integers. Nonpositive integers
/// are poles and raise DomainError.
double digamma(HalfInt x);

/// Principal square root, Re > 0 off the cut (-inf, 0]. Negative reals raise DomainError.
Complex principal_sqrt(Complex w);

/// Principal logarithm, -pi < Im < pi. Nonpositive reals raise DomainError.
Complex principal_log(Complex w);

/// S(z) = sqrt(-z) * sqrt(4 - z), the square root of z(z-4) that is analytic on
/// C \ [0,4], positive for z < 0 and asymptotic to -z at infinity.
Complex resolvent_sqrt_1d(Complex z);

/// log(k!) to double precision.
double ln_factorial(std::int64_t k);

/// Throws DomainError if either component is NaN or infinite.
void require_finite(Complex w, const char* what);

/// Exact sum_{k=1}^{m} 1/(2k-1); zero for m <= 0.
Rational odd_harmonic(std::int64_t m);

/// (-1)^k for any integer k.
constexpr int sign_pow(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace latgreen
