#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace latgreen::detail {

// Complex mantissa with a separate binary exponent. Products of many
// factorials and powers stay representable; only the final value is
// converted back to double.
class Scaled {
 public:
  Scaled() = default;
  explicit Scaled(std::complex<double> v) : m_(v), e_(0) { normalize(); }

  static Scaled from_log(double log_magnitude) {
    // exp(x) = 2^(x / ln 2)
    const double b = log_magnitude / std::log(2.0);
    const double fl = std::floor(b);
    Scaled s;
    s.m_ = std::exp2(b - fl);
    s.e_ = static_cast<std::int64_t>(fl);
    s.normalize();
    return s;
  }

  bool is_zero() const { return m_ == 0.0; }

  Scaled& operator*=(const Scaled& o) {
    m_ *= o.m_;
    e_ += o.e_;
    normalize();
    return *this;
  }
  Scaled& operator*=(std::complex<double> f) {
    m_ *= f;
    normalize();
    return *this;
  }
  Scaled& operator*=(double f) {
    m_ *= f;
    normalize();
    return *this;
  }
  friend Scaled operator*(Scaled a, const Scaled& b) { return a *= b; }

  std::complex<double> value() const {
    if (m_ == 0.0) return 0.0;
    if (e_ < -2000) return 0.0;
    if (e_ > 2000) return {HUGE_VAL, HUGE_VAL};
    const int e = static_cast<int>(e_);
    return {std::ldexp(m_.real(), e), std::ldexp(m_.imag(), e)};
  }

  // log2 of the magnitude, for overflow-free comparisons.
  double log2_abs() const {
    if (m_ == 0.0) return -HUGE_VAL;
    return std::log2(std::abs(m_)) + static_cast<double>(e_);
  }

 private:
  void normalize() {
    const double big = std::max(std::abs(m_.real()), std::abs(m_.imag()));
    if (big == 0.0 || !std::isfinite(big)) {
      if (big == 0.0) e_ = 0;
      return;
    }
    int ex = 0;
    std::frexp(big, &ex);
    if (ex != 0) {
      m_ = {std::ldexp(m_.real(), -ex), std::ldexp(m_.imag(), -ex)};
      e_ += ex;
    }
  }

  std::complex<double> m_{1.0, 0.0};
  std::int64_t e_ = 0;
};

}  // namespace latgreen::detail
