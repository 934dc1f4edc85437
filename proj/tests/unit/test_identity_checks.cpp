#include <gtest/gtest.h>

#include "latgreen/identity_checks.hpp"
#include "test_support.hpp"

namespace latgreen {
namespace {

using testing::box;

TEST(Identities, BinomialConvolutionExact) {
  for (std::int64_t k = 0; k <= 6; ++k) {
    for (const LatticePoint& n : box(2, 4)) EXPECT_TRUE(check_binomial_convolution(k, n)) << k << " " << n.str();
  }
}

TEST(Identities, ThresholdShellIdentitiesExact) {
  for (std::int64_t k = 0; k <= 5; ++k) {
    for (const LatticePoint& n : box(2, 5)) {
      EXPECT_TRUE(check_threshold_shell_identities(k, n)) << k << " " << n.str();
    }
  }
}

TEST(Identities, EndpointSingularParts) {
  for (double w : {0.0, 0.25}) {
    for (std::int64_t m = 0; m <= 2; ++m) {
      for (std::int64_t l = 0; l <= 2; ++l) {
        const IdentityResidual r = check_endpoint_singular_identities(w, m, l);
        EXPECT_TRUE(r.pass) << w << " " << m << " " << l << " " << r.even << " " << r.odd;
      }
    }
  }
  EXPECT_THROW(check_endpoint_singular_identities(1.5, 0, 0), DomainError);
}

TEST(Identities, SingularPartOneDimension) {
  EXPECT_LT(check_singular_part_1d(Complex(-1.0, 0.5), 3, 0), 1e-12);
  EXPECT_LT(check_singular_part_1d(Complex(5.0, -0.5), 2, 1), 1e-12);
  EXPECT_THROW(check_singular_part_1d(-1.0, 0, 2), DomainError);
}

TEST(Identities, CutJumpShrinksAfterSubtraction) {
  for (int q : {0, 2}) {
    const double x = q == 0 ? 0.5 : 7.5;
    const CutJump a = check_singular_part_2d(x, {1, 0}, q, 1e-2);
    const CutJump b = check_singular_part_2d(x, {1, 0}, q, 1e-3);
    EXPECT_LT(a.subtracted, 0.1 * a.raw);
    EXPECT_LT(b.subtracted, 0.1 * b.raw);
    EXPECT_LT(b.subtracted, a.subtracted);
  }
  EXPECT_THROW(check_singular_part_2d(4.0, {0, 0}, 1, 1e-2), DomainError);
}

}  // namespace
}  // namespace latgreen
