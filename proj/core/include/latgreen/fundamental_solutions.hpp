#pragma once

#include <functional>
#include <string>

#include "latgreen/lattice.hpp"
#include "latgreen/special_functions.hpp"

namespace latgreen {

/// Exact value r + p / pi + q (log 2) / pi with rational r, p, q.
struct Channels {
  Rational rational = 0;
  Rational inv_pi = 0;
  Rational log2_inv_pi = 0;

  double to_double() const;
  bool is_zero() const { return rational == 0 && inv_pi == 0 && log2_inv_pi == 0; }

  Channels& operator+=(const Channels& o);
  Channels& operator-=(const Channels& o);
  Channels& operator*=(const Rational& c);
  friend Channels operator+(Channels a, const Channels& b) { return a += b; }
  friend Channels operator-(Channels a, const Channels& b) { return a -= b; }
  friend Channels operator*(Channels a, const Rational& c) { return a *= c; }
  friend Channels operator*(const Rational& c, Channels a) { return a *= c; }
  friend bool operator==(const Channels&, const Channels&) = default;

  std::string str() const;
};

/// Exact complex value re + i im, each split into channels.
struct FundSolValue {
  Channels re;
  Channels im;

  Complex to_complex() const { return {re.to_double(), im.to_double()}; }
  bool has_imaginary() const { return !im.is_zero(); }

  FundSolValue& operator+=(const FundSolValue& o);
  FundSolValue& operator-=(const FundSolValue& o);
  FundSolValue& operator*=(const Rational& c);
  friend FundSolValue operator+(FundSolValue a, const FundSolValue& b) { return a += b; }
  friend FundSolValue operator-(FundSolValue a, const FundSolValue& b) { return a -= b; }
  friend FundSolValue operator*(FundSolValue a, const Rational& c) { return a *= c; }
  friend FundSolValue operator*(const Rational& c, FundSolValue a) { return a *= c; }
  friend bool operator==(const FundSolValue&, const FundSolValue&) = default;

  std::string str() const;
};

/// E[n] with H0 E = delta_0 and E(0, 0) = 0 on Z^2 (H0 u = 4u - sum of the
/// four neighbours). Real; every 4F3(...; 1) is a terminating exact sum.
FundSolValue fundsol_h0(const LatticePoint& n);

/// E_1(4, n), the regular part of G(z, n) at the embedded threshold z = 4;
/// (H0 - 4) E_1 = delta_0.
FundSolValue fundsol_embedded(const LatticePoint& n);

/// (-1)^{n1} E_1(4, n), a fundamental solution of the discrete d'Alembertian
/// (box u)[n] = u[n+e1] + u[n-e1] - u[n+e2] - u[n-e2].
FundSolValue fundsol_dalembertian(const LatticePoint& n);

/// -(-1)^{n1+n2} E[n], a fundamental solution of H0 - 8.
FundSolValue fundsol_h0_minus8(const LatticePoint& n);

enum class FundSolOperator { h0, h0_minus4, dalembertian, h0_minus8 };

std::string to_string(FundSolOperator op);
/// Accepts "h0", "h0-4", "dalembertian", "h0-8".
FundSolOperator fundsol_operator_from_string(const std::string& s);

/// Fundamental solution associated with op.
FundSolValue fundsol(FundSolOperator op, const LatticePoint& n);

using FundSolFn = std::function<FundSolValue(const LatticePoint&)>;

/// (op u)[n], evaluated exactly channel by channel.
FundSolValue apply_stencil(FundSolOperator op, const FundSolFn& u, const LatticePoint& n);

/// (op E)[n] for the fundamental solution of op; equals delta_0[n].
FundSolValue stencil_residual(FundSolOperator op, const LatticePoint& n);

}  // namespace latgreen
