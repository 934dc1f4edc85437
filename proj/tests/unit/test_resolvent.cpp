#include <gtest/gtest.h>

#include <cmath>

#include "latgreen/resolvent.hpp"
#include "test_support.hpp"

namespace latgreen {
namespace {

using testing::box;
using testing::Gen;
using testing::rel_err;

struct Frozen {
  int dim;
  Complex z;
  LatticePoint n;
  Complex value;
};

// Torus integrals at 30 digits (tests/oracle/torus_reference.py).
const std::vector<Frozen>& frozen() {
  static const std::vector<Frozen> values = {
      {1, -2.0, {0}, 0.28867513459481288},
      {1, -2.0, {1}, 0.077350269189625765},
      {1, 6.0, {2}, -0.020725942163690176},
      {2, -4.0, {0, 0}, 0.13414775089367055},
      {2, -4.0, {1, 0}, 0.018295501787341094},
      {2, -4.0, {1, 1}, 0.004818798587999712},
      {2, -1.0, {1, 1}, 0.032012403625186429},
      {2, -0.5, {0, 0}, 0.31623509730670991},
      {2, -0.5, {1, 0}, 0.10576448447004864},
      {2, -0.5, {2, 1}, 0.028902549293910556},
      {2, -0.5, {3, 3}, 0.0052148949247478254},
      {2, {4.0, 0.5}, {0, 0}, {0.0, 0.5500684864875894}},
      {2, {4.0, 0.5}, {1, 1}, {0.0, -0.23909938514378268}},
      {2, {4.0, 0.5}, {2, 1}, 0.12146659290310566},
      {2, {9.0, 1.0}, {2, 0}, {-0.0078654853753408947, 0.012583269371629452}},
      {3, -1.0, {0, 0, 0}, 0.17052380694853131},
  };
  return values;
}

TEST(Resolvent, FrozenValuesEveryRepresentation) {
  for (const Frozen& f : frozen()) {
    const double tol = f.dim == 3 ? 1e-11 : 1e-12;
    for (Representation rep : applicable_representations(f.dim, f.z)) {
      const GreenValue g = green_with(rep, f.dim, f.z, f.n);
      EXPECT_EQ(g.representation, rep);
      EXPECT_LT(rel_err(g.value, f.value), tol) << to_string(rep) << " d=" << f.dim << " n=" << f.n.str();
    }
    EXPECT_LT(rel_err(green_auto(f.dim, f.z, f.n).value, f.value), tol);
  }
}

TEST(Resolvent, OneDimensionalClosedForm) {
  // G(z, n) = ((2 - z - S)/2)^{|n|} / S, S = sqrt(z(z-4)) on the decaying branch
  const GreenValue g = green_1d(-2.0, 1);
  EXPECT_EQ(g.representation, Representation::closed_1d);
  EXPECT_NEAR(g.value.real(), (2.0 - std::sqrt(3.0)) / (2.0 * std::sqrt(3.0)) * 1.0, 1e-15);
  EXPECT_THROW(green_1d(2.0, 0), RegionError);
  EXPECT_THROW(green_1d(0.0, 0), RegionError);
}

TEST(Resolvent, RegionErrors) {
  EXPECT_THROW(green_auto(2, 3.0, {0, 0}), RegionError);
  EXPECT_THROW(green_laurent(2, 1.0, {0, 0}), RegionError);
  EXPECT_THROW(green_laurent(2, Complex(7.0, 1.0), {0, 0}), RegionError);
  EXPECT_THROW(green_laurent_2d(1.0, {0, 0}), RegionError);
  EXPECT_THROW(green_2d_embedded(5.0, {0, 0}), RegionError);
  EXPECT_THROW(green_2d_embedded(Complex(9.0, 0.1), {0, 0}), RegionError);
  EXPECT_THROW(green_1d_threshold0(5.0, 0), RegionError);
  EXPECT_THROW(green_1d_threshold4(-1.0, 0), RegionError);
  EXPECT_THROW(green_auto(3, Complex(6.0, 1.0), {0, 0, 0}), RegionError);
  EXPECT_THROW(green_with(Representation::laurent, 2, -5.0, {0}), DomainError);
  EXPECT_THROW(green_with(Representation::closed_1d, 2, -5.0, {0, 0}), RegionError);
  EXPECT_THROW(green_with(Representation::quadrature, 2, -5.0, {0, 0}), DomainError);
  EXPECT_THROW(green_auto(2, Complex(NAN, 0.0), {0, 0}), DomainError);
}

TEST(Resolvent, HerglotzSign) {
  Gen gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = static_cast<int>(gen.integer(1, 2));
    Complex z = gen.complex_in_box(-1.0, 4.0 * d + 1.0, 0.05, 3.0);
    if (gen.integer(0, 1) == 1) z = std::conj(z);
    const Complex g = green_auto(d, z, LatticePoint(std::vector<std::int64_t>(static_cast<std::size_t>(d), 0))).value;
    EXPECT_GT(g.imag() * z.imag(), 0.0) << "d=" << d << " z=" << z;
  }
}

TEST(Resolvent, ConjugationAndLatticeSymmetry) {
  Gen gen(32);
  for (int trial = 0; trial < 40; ++trial) {
    const Complex z = gen.complex_in_box(-2.0, 10.0, 0.1, 2.0);
    const LatticePoint n = gen.point(2, 5);
    const Complex g = green_auto(2, z, n).value;
    EXPECT_LT(std::abs(green_auto(2, std::conj(z), n).value - std::conj(g)), 1e-12 * std::abs(g));
    EXPECT_LT(std::abs(green_auto(2, z, {n[1], n[0]}).value - g), 1e-12 * std::abs(g));
    EXPECT_LT(std::abs(green_auto(2, z, {-n[0], n[1]}).value - g), 1e-12 * std::abs(g));
    EXPECT_LT(std::abs(green_auto(2, z, {n[0], -n[1]}).value - g), 1e-12 * std::abs(g));
  }
}

TEST(Resolvent, ReflectionAboutEmbeddedThreshold) {
  // The checkerboard sign flip maps H0 to 8 - H0: G(8 - z, n) = -(-1)^{n1+n2} G(z, n).
  Gen gen(33);
  for (int trial = 0; trial < 40; ++trial) {
    const Complex z = gen.complex_in_box(-1.0, 9.0, 0.1, 2.0);
    const LatticePoint n = gen.point(2, 4);
    const Complex g = green_auto(2, z, n).value;
    const Complex r = green_auto(2, 8.0 - z, n).value;
    EXPECT_LT(std::abs(r + static_cast<double>(sign_pow(n[0] + n[1])) * g), 1e-12 * std::abs(g));
  }
}

TEST(Resolvent, HelmholtzPropertyRandomPoints) {
  Gen gen(34);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = static_cast<int>(gen.integer(1, 2));
    const Complex z = gen.complex_in_box(-3.0, 4.0 * d + 3.0, -2.0, 2.0);
    if (std::abs(z.imag()) < 0.05) continue;
    const LatticePoint n = gen.point(d, 4);
    const KernelFn g = [&](const LatticePoint& m) { return green_auto(d, z, m).value; };
    const double delta = n.is_origin() ? 1.0 : 0.0;
    EXPECT_LT(std::abs(helmholtz_residual(g, z, n) - delta), 1e-10) << "z=" << z << " n=" << n.str();
  }
}

TEST(Resolvent, EmbeddedBoundaryIsRegularPartAtFour) {
  // Approaching z = 4 from above, G - (log term) tends to the boundary value.
  for (const LatticePoint& n : {LatticePoint{1, 0}, LatticePoint{2, 1}, LatticePoint{3, 0}}) {
    const GreenValue b = green_2d_embedded_boundary(n);
    const Complex g = green_2d_embedded(Complex(4.0, 1e-6), n).value;
    EXPECT_LT(std::abs(g - b.value), 1e-5) << n.str();
  }
  // odd |n|: value (-1)^max / 4
  EXPECT_EQ(green_2d_embedded_boundary({1, 0}).value, Complex(-0.25));
  EXPECT_EQ(green_2d_embedded_boundary({2, 1}).value, Complex(0.25));
}

TEST(Resolvent, DiagonalFormsAgree) {
  const Complex z(3.0, 0.7);
  for (std::int64_t m = 0; m <= 6; ++m) {
    const Complex t = diag_p0(z, m, DiagForm::threshold4);
    const Complex e = diag_p0(z, m, DiagForm::endpoint);
    const Complex g = static_cast<double>(sign_pow(m)) * green_2d_embedded(z, {m, m}).value;
    EXPECT_LT(std::abs(t - g), 1e-12 * std::abs(g)) << m;
    EXPECT_LT(std::abs(e - g), 1e-12 * std::abs(g)) << m;
  }
  EXPECT_THROW(diag_p0(-5.0, 0, DiagForm::threshold4), RegionError);
  EXPECT_THROW(diag_p0(4.0, 0), RegionError);
}

TEST(Resolvent, RotatedCoordinates) {
  const Complex z = -0.5;
  const std::vector<Complex> p0 = diag_p0_values(z, 5);
  const RotatedRecurrence rec(z, p0, 5, 5);
  for (std::int64_t m = 0; m <= 3; ++m) {
    for (std::int64_t l = 0; l <= 3; ++l) {
      const double s = sign_pow(m + l);
      const GreenValue gp = green_laurent_2d(z, {m + l, m - l});
      const GreenValue gq = green_laurent_2d(z, {m + l + 1, m - l});
      // both sides carry their own certified error
      const double bp = gp.err_estimate + green_2d_endpoint(z, {m + l, m - l}).err_estimate;
      const double bq = gq.err_estimate + green_2d_endpoint(z, {m + l + 1, m - l}).err_estimate;
      EXPECT_LT(std::abs(endpoint_P(z, m, l, p0) - s * gp.value), bp) << m << " " << l;
      EXPECT_LT(std::abs(endpoint_Q(z, m, l, p0) - s * gq.value), bq) << m << " " << l;
      EXPECT_LT(std::abs(rec.P(m, l) - s * gp.value), bp) << m << " " << l;
      EXPECT_LT(std::abs(rec.Q(m, l) - s * gq.value), bq) << m << " " << l;
    }
  }
  EXPECT_THROW(endpoint_P(z, 4, 0, std::span<const Complex>(p0).first(3)), DomainError);
}

TEST(Resolvent, EndpointErrorEstimateIsABound) {
  // Includes points outside the well-conditioned region, where the bound is large.
  const std::vector<std::pair<Complex, std::int64_t>> refs = {
      {-0.5, 0}, {Complex(-1.0, 1.0), 0}, {Complex(1.0, 3.0), 0}, {Complex(-8.0, 2.0), 0}, {Complex(7.0, 2.0), 0}};
  for (const auto& [z, unused] : refs) {
    for (const LatticePoint& n : {LatticePoint{4, 0}, LatticePoint{4, 3}, LatticePoint{5, 5}, LatticePoint{6, 1}}) {
      const Complex ref = green_auto(2, z, n, 1e-15).value;
      for (const GreenValue& g : {green_2d_endpoint(z, n), green_2d_recurrence(z, n)}) {
        EXPECT_LE(std::abs(g.value - ref), g.err_estimate + 1e-15 * std::abs(ref))
            << "z=" << z << " n=" << n.str() << " " << to_string(g.representation);
      }
    }
  }
}

TEST(Resolvent, PochhammerTelescoping) {
  Gen gen(35);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t p = gen.integer(-5, 5);
    const std::int64_t q = p + gen.integer(0, 6);
    const HalfInt r = HalfInt::half(gen.integer(-7, 7));
    const std::int64_t k = gen.integer(0, 6);
    Rational direct = 0;
    for (std::int64_t j = p; j <= q; ++j) direct += pochhammer(r.to_rational() + j, k);
    EXPECT_EQ(pochhammer_telescoping(p, q, r, k), direct);
  }
  EXPECT_THROW(pochhammer_telescoping(2, 1, kHalf, 0), DomainError);
}

TEST(Resolvent, ApplicableRepresentations) {
  const auto reps = applicable_representations(2, Complex(4.0, 0.5));
  EXPECT_NE(std::find(reps.begin(), reps.end(), Representation::embedded_2d), reps.end());
  EXPECT_EQ(std::find(reps.begin(), reps.end(), Representation::laurent), reps.end());
  const auto far = applicable_representations(2, -10.0);
  EXPECT_NE(std::find(far.begin(), far.end(), Representation::laurent), far.end());
  EXPECT_TRUE(applicable_representations(2, 3.0).empty());
  for (Representation r : {Representation::closed_1d, Representation::laurent_2d, Representation::bessel_laplace}) {
    EXPECT_EQ(representation_from_string(to_string(r)), r);
  }
  EXPECT_FALSE(representation_from_string("nonsense").has_value());
}

}  // namespace
}  // namespace latgreen
