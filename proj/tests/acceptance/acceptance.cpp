// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are fixed
// here and never relaxed by command-line options.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "latgreen/fundamental_solutions.hpp"
#include "latgreen/identity_checks.hpp"
#include "latgreen/oracles.hpp"
#include "latgreen/resolvent.hpp"
#include "test_support.hpp"

namespace latgreen {
namespace {

using testing::box;
using testing::rel_err;

constexpr double kOracleRelTol = 1e-9;       // 1: representations vs torus quadrature
constexpr double kQuadratureTol = 1e-11;     // 1, 8: certified accuracy of the reference
constexpr double kHelmholtzTol = 1e-9;       // 2: |stencil residual - delta_0|
constexpr double kEndpointIdentityTol = 1e-9;  // 4: numerical identities
constexpr double kWalkTol = 1e-10;           // 5: walk vs resolvent, beyond the tail bound
constexpr double kWalkTail = 1e-13;          // 5: certified truncation target
constexpr double kOverlapTol = 1e-10;        // 6: representation overlaps
constexpr double kCutRatio = 0.1;            // 7: subtracted jump <= raw jump / 10
constexpr double kLaplaceQuadTol = 1e-8;     // 8: Laplace-Bessel vs quadrature (relative)
constexpr double kLaplaceClosedTol = 1e-10;  // 8: d = 1 vs the closed transform (relative)
constexpr double kDiagonalTol = 1e-9;        // 9: diagonal threshold series vs embedded

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Worst {
 public:
  void add(double err, const std::string& where) {
    if (!(err <= worst_)) {
      worst_ = std::isnan(err) ? INFINITY : err;
      where_ = where;
    }
    ++count_;
  }
  double value() const { return worst_; }
  std::string str() const {
    std::ostringstream os;
    os << "worst " << worst_ << " at " << where_ << " over " << count_ << " checks";
    return os.str();
  }

 private:
  double worst_ = 0.0;
  std::string where_ = "-";
  long count_ = 0;
};

std::string zstr(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

const std::vector<Complex>& sample_z(int d) {
  // Spread over every region off [0, 4d]: outside the Laurent disk, near each
  // threshold from both half-planes, and in between.
  static const std::vector<Complex> one = {
      -3.0, -0.5, {-1.0, 1.0}, {0.5, 0.5}, {0.3, -0.4}, {1.0, 1.0}, {2.0, 0.3}, {2.0, -1.0}, {3.5, 0.4},
      4.5,  6.0,  {5.0, 1.0},  {3.0, 2.0}, {-0.2, 0.1}, 8.0,        {9.0, 3.0}, -6.0,        {4.2, 0.2},
      {1.0, -3.0}, {10.0, -1.0}};
  static const std::vector<Complex> two = {
      -4.0,       -0.5,        {-1.0, 1.0}, {0.5, 0.5}, {0.3, -0.4}, {2.0, 0.5}, {3.0, 1.0},
      {4.0, 0.5}, {4.0, -0.3}, {5.0, 0.7},  {6.0, -1.0}, {7.5, 0.4}, 8.5,        {9.0, 1.0},
      10.0,       {4.0, 5.0},  {12.0, -2.0}, {1.0, 3.0}, {-8.0, 2.0}, {7.0, 2.0}};
  return d == 1 ? one : two;
}

// Reduced box: by lattice symmetry G depends on (|n_1|, |n_2|) up to order.
std::vector<LatticePoint> reduced_box(int d, int r) {
  std::vector<LatticePoint> out;
  for (const LatticePoint& n : box(d, r)) {
    if (n[0] < 0 || (d == 2 && (n[1] < 0 || n[1] > n[0]))) continue;
    out.push_back(n);
  }
  return out;
}

// Every element of the full box for d = 2 is compared too (the reduced set
// would hide a symmetry bug); quadrature values are shared via the fold.
Outcome criterion_1() {
  Worst worst;
  for (int d = 1; d <= 2; ++d) {
    for (Complex z : sample_z(d)) {
      std::map<std::pair<std::int64_t, std::int64_t>, Complex> reference;
      for (const LatticePoint& n : reduced_box(d, 4)) {
        reference[{n[0], d == 2 ? n[1] : 0}] = quadrature_torus_auto(d, z, n, kQuadratureTol).value;
      }
      for (const LatticePoint& n : box(d, 4)) {
        std::int64_t a = std::abs(n[0]);
        std::int64_t b = d == 2 ? std::abs(n[1]) : 0;
        if (b > a) std::swap(a, b);
        const Complex ref = reference.at({a, b});
        for (Representation rep : applicable_representations(d, z)) {
          double err = INFINITY;
          try {
            err = rel_err(green_with(rep, d, z, n).value, ref);
          } catch (const std::exception&) {
          }
          worst.add(err, "d=" + std::to_string(d) + " z=" + zstr(z) + " n=" + n.str() + " " + to_string(rep));
        }
      }
    }
  }
  return {worst.value() <= kOracleRelTol, worst.str()};
}

Outcome criterion_2() {
  Worst worst;
  for (int d = 1; d <= 2; ++d) {
    for (Complex z : sample_z(d)) {
      for (Representation rep : applicable_representations(d, z)) {
        const KernelFn g = [&](const LatticePoint& m) { return green_with(rep, d, z, m).value; };
        for (const LatticePoint& n : box(d, 6)) {
          double err = INFINITY;
          try {
            err = std::abs(helmholtz_residual(g, z, n) - (n.is_origin() ? 1.0 : 0.0));
          } catch (const std::exception&) {
          }
          worst.add(err, "d=" + std::to_string(d) + " z=" + zstr(z) + " n=" + n.str() + " " + to_string(rep));
        }
      }
    }
  }
  return {worst.value() <= kHelmholtzTol, worst.str()};
}

Outcome criterion_3() {
  int failures = 0;
  long checks = 0;
  const FundSolValue delta{{1, 0, 0}, {}};
  auto stencil = [&](FundSolOperator op, int r) {
    for (const LatticePoint& n : box(2, r)) {
      const FundSolValue res = stencil_residual(op, n);
      // channel-by-channel equality: rational, 1/pi and log2/pi separately
      failures += !(res == (n.is_origin() ? delta : FundSolValue{}));
      ++checks;
    }
  };
  stencil(FundSolOperator::h0, 10);
  stencil(FundSolOperator::h0_minus4, 6);
  const bool values = fundsol_h0({0, 0}) == FundSolValue{} &&
                      fundsol_h0({1, 0}) == FundSolValue{{Rational(-1, 4), 0, 0}, {}} &&
                      fundsol_h0({1, 1}) == FundSolValue{{0, -1, 0}, {}};
  std::ostringstream os;
  os << failures << " nonzero exact residuals over " << checks << " points; E(0,0)=0, E(1,0)=-1/4, E(1,1)=-1/pi "
     << (values ? "reproduced" : "NOT reproduced");
  return {failures == 0 && values, os.str()};
}

Outcome criterion_4() {
  int shell_failures = 0;
  for (std::int64_t k = 0; k <= 8; ++k) {
    for (const LatticePoint& n : box(2, 8)) shell_failures += !check_threshold_shell_identities(k, n);
  }
  int binomial_failures = 0;
  for (std::int64_t k = 0; k <= 10; ++k) {
    for (const LatticePoint& n : box(2, 8)) binomial_failures += !check_binomial_convolution(k, n);
  }
  Worst endpoint;
  for (double w : {0.0, 0.1, 0.2, 0.3, 0.4}) {
    for (std::int64_t m = 0; m <= 3; ++m) {
      for (std::int64_t l = 0; l <= 3; ++l) {
        const IdentityResidual r = check_endpoint_singular_identities(w, m, l, kEndpointIdentityTol);
        std::ostringstream where;
        where << "w=" << w << " m=" << m << " l=" << l;
        endpoint.add(std::max(r.even, r.odd), where.str());
      }
    }
  }
  std::ostringstream os;
  os << "shell identities " << shell_failures << " failures (exact, k<=8, |n_j|<=8); binomial convolution "
     << binomial_failures << " failures (exact, k<=10); endpoint identities " << endpoint.str();
  return {shell_failures == 0 && binomial_failures == 0 && endpoint.value() <= kEndpointIdentityTol, os.str()};
}

Outcome criterion_5() {
  Worst worst;
  for (int d = 1; d <= 2; ++d) {
    for (double eps : {0.25, 0.5, 0.75}) {
      const WalkConfig cfg = WalkConfig::for_tolerance(d, eps, kWalkTail);
      const Complex z = -2.0 * d * eps / (1.0 - eps);
      for (const LatticePoint& n : box(d, 3)) {
        const WalkValue w = walk_expectation(cfg, n);
        const double g = (2.0 * d / (1.0 - eps) * green_auto(d, z, n).value).real();
        std::ostringstream where;
        where << "d=" << d << " eps=" << eps << " n=" << n.str();
        worst.add(std::abs(w.value - g) + w.tail_bound, where.str());
      }
    }
  }
  int sum_failures = 0;
  for (int d = 1; d <= 2; ++d) {
    for (std::int64_t k = 0; k <= 12; ++k) {
      Rational total = 0;
      for (const LatticePoint& n : box(d, static_cast<int>(k))) total += walk_prob_exact(d, k, n);
      sum_failures += total != 1;
    }
  }
  std::ostringstream os;
  os << "walk vs resolvent (error + tail bound) " << worst.str() << "; sum P(X_k=n) != 1 for " << sum_failures
     << " of 26 (d, k)";
  return {worst.value() <= kWalkTol && sum_failures == 0, os.str()};
}

Outcome criterion_6() {
  Worst laurent_endpoint;
  Worst endpoint_recurrence;
  const Complex z = -0.5;
  for (const LatticePoint& n : box(2, 6)) {
    const Complex e = green_2d_endpoint(z, n).value;
    laurent_endpoint.add(std::abs(green_laurent_2d(z, n).value - e), n.str());
    endpoint_recurrence.add(std::abs(green_2d_recurrence(z, n).value - e), n.str());
  }
  Worst closed_threshold;
  for (Complex w : {Complex(-2.0), Complex(-1.0, 1.0), Complex(-0.5, -0.5), Complex(1.0, 2.0)}) {
    for (std::int64_t n = -8; n <= 8; ++n) {
      closed_threshold.add(std::abs(green_1d(w, n).value - green_1d_threshold0(w, n).value),
                           "threshold-0 z=" + zstr(w) + " n=" + std::to_string(n));
    }
  }
  for (Complex w : {Complex(6.0), Complex(5.0, 1.0), Complex(4.5, -0.5), Complex(3.0, 2.0)}) {
    for (std::int64_t n = -8; n <= 8; ++n) {
      closed_threshold.add(std::abs(green_1d(w, n).value - green_1d_threshold4(w, n).value),
                           "threshold-4 z=" + zstr(w) + " n=" + std::to_string(n));
    }
  }
  std::ostringstream os;
  os << "laurent/endpoint " << laurent_endpoint.str() << "; endpoint/recurrence " << endpoint_recurrence.str()
     << "; closed/threshold " << closed_threshold.str();
  const bool pass = laurent_endpoint.value() <= kOverlapTol && endpoint_recurrence.value() <= kOverlapTol &&
                    closed_threshold.value() <= kOverlapTol;
  return {pass, os.str()};
}

// Across the cut the raw kernel jumps by O(1); with the singular part removed
// the remainder is analytic, so its jump is O(delta). Required at each delta:
// subtracted <= raw / 10, and the subtracted jump shrinks from 1e-2 to 1e-3.
Outcome criterion_7() {
  const std::vector<std::tuple<int, double, LatticePoint>> samples = {
      {0, 0.5, {0, 0}}, {0, 1.5, {1, 0}}, {0, 3.0, {2, 1}}, {0, 1.0, {3, 3}},
      {2, 7.5, {0, 0}}, {2, 6.5, {1, 1}}, {2, 5.0, {2, 0}}, {2, 7.0, {3, 1}}};
  double worst_ratio = 0.0;
  double min_shrink = INFINITY;
  bool decreasing = true;
  std::string where = "-";
  for (const auto& [q, x, n] : samples) {
    const CutJump a = check_singular_part_2d(x, n, q, 1e-2);
    const CutJump b = check_singular_part_2d(x, n, q, 1e-3);
    const double ratio = std::max(a.subtracted / a.raw, b.subtracted / b.raw);
    if (!(ratio <= worst_ratio)) {
      worst_ratio = std::isnan(ratio) ? INFINITY : ratio;
      std::ostringstream os;
      os << "q=" << q << " x=" << x << " n=" << n.str();
      where = os.str();
    }
    decreasing = decreasing && b.subtracted < a.subtracted;
    min_shrink = std::min(min_shrink, a.subtracted / b.subtracted);
  }
  std::ostringstream os;
  os << "max subtracted/raw jump " << worst_ratio << " at " << where << " over " << samples.size()
     << " (q, x, n); subtracted jump shrinks by a factor >= " << min_shrink << " from delta 1e-2 to 1e-3";
  return {worst_ratio <= kCutRatio && decreasing, os.str()};
}

Outcome criterion_8() {
  const std::vector<std::pair<int, Complex>> points = {
      {1, -0.5},        {1, -2.0}, {1, {-1.0, 1.5}}, {1, {-4.0, -2.0}}, {1, -0.1},
      {2, -0.5},        {2, -4.0}, {2, {-1.0, 1.0}}, {2, {-3.0, -2.0}}, {2, -0.2}};
  const std::vector<LatticePoint> n1 = {{0}, {1}, {3}};
  const std::vector<LatticePoint> n2 = {{0, 0}, {1, 0}, {2, 1}};
  Worst quad;
  Worst closed;
  for (const auto& [d, z] : points) {
    for (const LatticePoint& n : d == 1 ? n1 : n2) {
      const Complex lb = laplace_bessel(d, z, n).value;
      quad.add(rel_err(lb, quadrature_torus_auto(d, z, n, kQuadratureTol).value),
               "d=" + std::to_string(d) + " z=" + zstr(z) + " n=" + n.str());
      if (d == 1) closed.add(rel_err(lb, laplace_closed_1d(z, n[0])), "z=" + zstr(z) + " n=" + n.str());
    }
  }
  std::ostringstream os;
  os << "vs quadrature " << quad.str() << "; d=1 vs closed transform " << closed.str();
  return {quad.value() <= kLaplaceQuadTol && closed.value() <= kLaplaceClosedTol, os.str()};
}

// Local re-implementation of the diagonal threshold-4 series with the series
// variable ((z - 4)/scale)^2, used to show that scale 16 is wrong.
Complex diagonal_series(Complex z, std::int64_t m, double scale) {
  const Complex w = (z - 4.0) / scale;
  const Complex x = w * w;
  const Complex log_term = std::log(-(z - 4.0) * (z - 4.0) / 16.0);
  const double a = 0.5 + static_cast<double>(m);
  const double b = 0.5 - static_cast<double>(m);
  double psi_a = digamma(HalfInt::half(1 + 2 * m));
  double psi_b = digamma(HalfInt::half(1 - 2 * m));
  double psi_one = -kEulerGamma;
  Complex coef = 1.0;
  Complex sum = 0.0;
  for (int k = 0; k < 2000; ++k) {
    sum += coef * (2.0 * psi_one - psi_a - psi_b - log_term);
    coef *= x * ((a + k) * (b + k) / ((k + 1.0) * (k + 1.0)));
    psi_a += 1.0 / (a + k);
    psi_b += 1.0 / (b + k);
    psi_one += 1.0 / (k + 1.0);
    if (std::abs(coef) < 1e-18 * std::abs(sum)) break;
  }
  return Complex(0.0, 1.0) / (4.0 * std::numbers::pi) * sum;
}

Outcome criterion_9() {
  const std::vector<Complex> zs = {{4.0, 0.5}, {3.0, 1.0}, {5.5, 0.8}, {2.0, -0.5}, {6.0, 1.5}};
  Worst implemented;
  Worst local_quarter;
  double printed_min = INFINITY;
  for (Complex z : zs) {
    for (std::int64_t m = 0; m <= 6; ++m) {
      const Complex ref = static_cast<double>(sign_pow(m)) * green_2d_embedded(z, {m, m}).value;
      const std::string where = "z=" + zstr(z) + " m=" + std::to_string(m);
      implemented.add(rel_err(diag_p0(z, m, DiagForm::threshold4), ref), where);
      // the local series with conjugation handled explicitly
      const Complex q = z.imag() < 0 ? std::conj(diagonal_series(std::conj(z), m, 4.0)) : diagonal_series(z, m, 4.0);
      local_quarter.add(rel_err(q, ref), where);
      const Complex p = z.imag() < 0 ? std::conj(diagonal_series(std::conj(z), m, 16.0))
                                     : diagonal_series(z, m, 16.0);
      printed_min = std::min(printed_min, rel_err(p, ref));
    }
  }
  std::ostringstream os;
  os << "implemented ((z-4)/4)^2k series " << implemented.str() << "; independent ((z-4)/4)^2k sum "
     << local_quarter.str() << "; printed ((z-4)/16)^2k sum misses by >= " << printed_min << " (relative)";
  const bool pass =
      implemented.value() <= kDiagonalTol && local_quarter.value() <= kDiagonalTol && printed_min > 1e-3;
  return {pass, os.str()};
}

}  // namespace
}  // namespace latgreen

int main() {
  using latgreen::Outcome;
  const std::vector<std::function<Outcome()>> criteria = {
      latgreen::criterion_1, latgreen::criterion_2, latgreen::criterion_3,
      latgreen::criterion_4, latgreen::criterion_5, latgreen::criterion_6,
      latgreen::criterion_7, latgreen::criterion_8, latgreen::criterion_9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s (%.1f s) %s\n", i + 1, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
