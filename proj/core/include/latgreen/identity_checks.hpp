#pragma once

#include <cstdint>

#include "latgreen/lattice.hpp"
#include "latgreen/special_functions.hpp"

namespace latgreen {

/// sum_{|a|=k} (2|a|+|n|)! / (a1! a2! (a1+|n1|)! (a2+|n2|)!)
///   == ((2k+|n|)!)^2 / ((k+|n1|)! (k+|n2|)! (|n|+k)! k!), exactly.
bool check_binomial_convolution(std::int64_t k, const LatticePoint& n);

/// Shell identities equating the two forms of the singular part at the
/// embedded threshold z = 4. With
///   S_j = sum_{|a|=j} (-1)^{a1} / (a1! a2!) (1/2+n1)_{a1} (1/2-n1)_{a1} (1/2+n2)_{a2} (1/2-n2)_{a2},
/// checks exactly that
///   S_{2k}   == 4^{2k} / (2k)! prod_{+-,+-} ((1 +- n1 +- n2)/2)_k,
///   S_{2k+1} == 4^{2k+1} / (2k+1)! ((n1+n2)/2)_{k+1} ((n1-n2)/2)_{k+1}
///               ((2-n1+n2)/2)_k ((2-n1-n2)/2)_k.
bool check_threshold_shell_identities(std::int64_t k, const LatticePoint& n);

struct IdentityResidual {
  /// |LHS - RHS| of the identity for the P-type (even |n|) coordinates.
  double even = 0.0;
  /// Same for the Q-type (odd |n|) coordinates; 0 when (m, l) is not in N_0^2.
  double odd = 0.0;
  bool pass = false;
};

/// Identities equating the two forms of the singular part at the endpoint
/// thresholds z = 0, 8: an F_B^{(2)}(...; w, w) against finite 4F3((w-1)^2)
/// sums weighted by 2F1(...; w(2-w)). Needs |w| < 1 and |w(2-w)| < 1.
IdentityResidual check_endpoint_singular_identities(double w, std::int64_t m, std::int64_t l,
                                                    double tol = 1e-9);

/// d = 1: |(G - S_F_B) - A| where S_F_B is the F_B^{(1)} singular part at the
/// threshold 4q and A the analytic part of the threshold expansion (q in {0, 1}).
/// Vanishes identically; z must lie in the threshold's disk off [0, 4].
double check_singular_part_1d(Complex z, std::int64_t n, int q);

struct CutJump {
  /// |A(x+i delta) - A(x-i delta)| with A = G - (singular part).
  double subtracted = 0.0;
  /// |G(x+i delta) - G(x-i delta)|.
  double raw = 0.0;
};

/// d = 2, q in {0, 2}: jumps across the cut at x of G and of G minus its
/// F_B^{(2)} log singular part at the threshold 4q. Requires |x + i delta - 4q| < 4.
/// q = 1 is rejected: at the embedded threshold the coincidence of singular
/// parts is equivalent to check_threshold_shell_identities.
CutJump check_singular_part_2d(double x, const LatticePoint& n, int q, double delta);

}  // namespace latgreen
