#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "latgreen/fundamental_solutions.hpp"
#include "latgreen/oracles.hpp"
#include "latgreen/resolvent.hpp"
#include "test_support.hpp"

namespace latgreen {
namespace {

using testing::box;

Channels ch(Rational r, Rational p = 0, Rational l = 0) { return {r, p, l}; }

TEST(FundSol, KnownValues) {
  EXPECT_EQ(fundsol_h0({0, 0}).re, ch(0));
  EXPECT_EQ(fundsol_h0({1, 0}).re, ch(Rational(-1, 4)));
  EXPECT_EQ(fundsol_h0({1, 1}).re, ch(0, -1));
  EXPECT_EQ(fundsol_h0({2, 0}).re, ch(-1, 2));
  EXPECT_EQ(fundsol_h0({2, 1}).re, ch(Rational(1, 4), -2));
  EXPECT_EQ(fundsol_h0({3, 2}).re, ch(Rational(-1, 4), Rational(-2, 3)));
  EXPECT_FALSE(fundsol_h0({5, 3}).has_imaginary());
  EXPECT_NEAR(fundsol_h0({1, 1}).to_complex().real(), -1.0 / std::numbers::pi, 1e-16);
}

TEST(FundSol, LatticeSymmetry) {
  for (const LatticePoint& n : box(2, 7)) {
    const FundSolValue e = fundsol_h0(n);
    EXPECT_EQ(fundsol_h0({n[1], n[0]}), e);
    EXPECT_EQ(fundsol_h0({-n[0], n[1]}), e);
    EXPECT_EQ(fundsol_embedded({n[1], n[0]}), fundsol_embedded(n));
  }
}

TEST(FundSol, StencilResidualsAreExactDelta) {
  const FundSolValue delta{ch(1), ch(0)};
  for (FundSolOperator op : {FundSolOperator::h0, FundSolOperator::h0_minus4, FundSolOperator::dalembertian,
                             FundSolOperator::h0_minus8}) {
    const int r = op == FundSolOperator::h0 ? 10 : 6;
    for (const LatticePoint& n : box(2, r)) {
      const FundSolValue res = stencil_residual(op, n);
      EXPECT_EQ(res, n.is_origin() ? delta : FundSolValue{}) << to_string(op) << " " << n.str() << " " << res.str();
    }
  }
}

TEST(FundSol, EmbeddedMatchesFloatingBoundaryValue) {
  for (const LatticePoint& n : box(2, 5)) {
    const Complex exact = fundsol_embedded(n).to_complex();
    const Complex floating = green_2d_embedded_boundary(n).value;
    EXPECT_LT(std::abs(exact - floating), 1e-13) << n.str();
  }
}

TEST(FundSol, PotentialKernelRelation) {
  // the classical potential kernel of the planar walk equals -4 E
  for (const LatticePoint& n : {LatticePoint{1, 0}, LatticePoint{1, 1}, LatticePoint{3, 2}, LatticePoint{5, 0}}) {
    const double a = potential_kernel_2d(n).value.real();
    EXPECT_NEAR(a, -4.0 * fundsol_h0(n).to_complex().real(), 1e-12) << n.str();
  }
}

TEST(FundSol, OperatorNames) {
  for (FundSolOperator op : {FundSolOperator::h0, FundSolOperator::h0_minus4, FundSolOperator::dalembertian,
                             FundSolOperator::h0_minus8}) {
    EXPECT_EQ(fundsol_operator_from_string(to_string(op)), op);
  }
  EXPECT_THROW(fundsol_operator_from_string("h1"), Error);
  EXPECT_THROW(fundsol_h0({1, 2, 3}), Error);
}

TEST(FundSol, ChannelArithmetic) {
  const Channels a = ch(1, 2, 3);
  const Channels b = ch(Rational(1, 2), -1, 0);
  EXPECT_EQ(a + b, ch(Rational(3, 2), 1, 3));
  EXPECT_EQ(a - a, Channels{});
  EXPECT_EQ(Rational(2) * b, ch(1, -2, 0));
  EXPECT_NEAR(a.to_double(), 1.0 + (2.0 + 3.0 * std::numbers::ln2) / std::numbers::pi, 1e-15);
}

}  // namespace
}  // namespace latgreen
