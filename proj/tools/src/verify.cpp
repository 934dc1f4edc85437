#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "latgreen/fundamental_solutions.hpp"
#include "latgreen/identity_checks.hpp"
#include "latgreen/oracles.hpp"
#include "latgreen/resolvent.hpp"
#include "latgreen_cli/cli.hpp"

namespace latgreen::cli {

namespace {

// Runs one case; exceptions count as failures with the message attached.
void add_case(SuiteReport& r, const std::string& name, double tol,
              const std::function<double()>& residual) {
  CaseResult c;
  c.name = name;
  c.tol = tol;
  try {
    c.residual = residual();
    c.pass = c.residual <= tol;
  } catch (const std::exception& e) {
    c.residual = std::numeric_limits<double>::infinity();
    c.note = e.what();
  }
  r.cases.push_back(std::move(c));
}

double rel_err(Complex a, Complex ref) { return std::abs(a - ref) / std::max(std::abs(ref), 1e-300); }

std::vector<LatticePoint> box(int d, int r) {
  std::vector<LatticePoint> out;
  if (d == 1) {
    for (int a = -r; a <= r; ++a) out.push_back(LatticePoint{a});
  } else {
    for (int a = -r; a <= r; ++a) {
      for (int b = -r; b <= r; ++b) out.push_back(LatticePoint{a, b});
    }
  }
  return out;
}

double max_helmholtz(Representation rep, int d, Complex z, int r) {
  const KernelFn g = [&](const LatticePoint& m) { return green_with(rep, d, z, m).value; };
  double worst = 0.0;
  for (const LatticePoint& n : box(d, r)) {
    const double delta = n.is_origin() ? 1.0 : 0.0;
    worst = std::max(worst, std::abs(helmholtz_residual(g, z, n) - delta));
  }
  return worst;
}

void suite_helmholtz(SuiteReport& r) {
  const std::vector<std::pair<int, Complex>> points = {
      {1, -2.0}, {1, {-1.0, 1.0}}, {1, 6.0}, {1, {5.0, 1.0}},
      {2, -4.0}, {2, -0.5},        {2, {4.0, 0.5}}, {2, {2.0, -1.0}}, {2, 8.5}, {2, {9.0, 1.0}},
  };
  for (const auto& [d, z] : points) {
    for (Representation rep : applicable_representations(d, z)) {
      add_case(r, "d=" + std::to_string(d) + " z=" + format_complex(z) + " " + to_string(rep), r.tol,
               [&, d = d, z = z] { return max_helmholtz(rep, d, z, 6); });
    }
  }
}

void suite_oracle(SuiteReport& r) {
  const std::vector<std::pair<int, Complex>> points = {
      {1, -2.0}, {1, 6.0}, {1, {2.0, 1.0}}, {1, {-1.0, -1.0}},
      {2, -4.0}, {2, -0.5}, {2, {4.0, 0.5}}, {2, {9.0, 1.0}}, {2, {2.0, -1.0}},
  };
  for (const auto& [d, z] : points) {
    for (const LatticePoint& n : box(d, 2)) {
      if (n[0] < 0 || (d == 2 && n[1] < 0)) continue;
      const OracleValue q = quadrature_torus_auto(d, z, n, 1e-13);
      for (Representation rep : applicable_representations(d, z)) {
        add_case(r, "d=" + std::to_string(d) + " z=" + format_complex(z) + " n=" + n.str() + " " + to_string(rep),
                 r.tol, [&, d = d, z = z] { return rel_err(green_with(rep, d, z, n).value, q.value); });
      }
      if (z.real() < 0.0) {
        add_case(r, "d=" + std::to_string(d) + " z=" + format_complex(z) + " n=" + n.str() + " bessel-laplace",
                 r.tol, [&, d = d, z = z] { return rel_err(laplace_bessel(d, z, n).value, q.value); });
      }
    }
  }
}

void suite_overlap(SuiteReport& r) {
  const Complex z = -0.5;
  double laurent_endpoint = 0.0;
  double endpoint_recurrence = 0.0;
  add_case(r, "laurent vs endpoint, z=-0.5, |n_j|<=6", r.tol, [&] {
    for (const LatticePoint& n : box(2, 6)) {
      laurent_endpoint = std::max(
          laurent_endpoint, std::abs(green_laurent_2d(z, n).value - green_2d_endpoint(z, n).value));
    }
    return laurent_endpoint;
  });
  add_case(r, "endpoint vs recurrence, z=-0.5, |n_j|<=6", r.tol, [&] {
    for (const LatticePoint& n : box(2, 6)) {
      endpoint_recurrence = std::max(
          endpoint_recurrence,
          std::abs(green_2d_endpoint(z, n).value - green_2d_recurrence(z, n).value));
    }
    return endpoint_recurrence;
  });
  for (Complex w : {Complex(-2.0), Complex(-1.0, 1.0)}) {
    add_case(r, "d=1 closed vs threshold-0, z=" + format_complex(w), r.tol, [w] {
      double worst = 0.0;
      for (int n = -8; n <= 8; ++n) {
        worst = std::max(worst, std::abs(green_1d(w, n).value - green_1d_threshold0(w, n).value));
      }
      return worst;
    });
  }
  for (Complex w : {Complex(6.0), Complex(5.0, 1.0)}) {
    add_case(r, "d=1 closed vs threshold-4, z=" + format_complex(w), r.tol, [w] {
      double worst = 0.0;
      for (int n = -8; n <= 8; ++n) {
        worst = std::max(worst, std::abs(green_1d(w, n).value - green_1d_threshold4(w, n).value));
      }
      return worst;
    });
  }
}

void suite_identities(SuiteReport& r) {
  add_case(r, "binomial convolution, k<=10, |n_j|<=6 (exact)", 0.0, [] {
    int failures = 0;
    for (int k = 0; k <= 10; ++k) {
      for (const LatticePoint& n : box(2, 6)) failures += !check_binomial_convolution(k, n);
    }
    return static_cast<double>(failures);
  });
  add_case(r, "threshold shell identities, k<=8, |n_j|<=8 (exact)", 0.0, [] {
    int failures = 0;
    for (int k = 0; k <= 8; ++k) {
      for (const LatticePoint& n : box(2, 8)) failures += !check_threshold_shell_identities(k, n);
    }
    return static_cast<double>(failures);
  });
  for (double w : {0.0, 0.1, 0.2, 0.3, 0.4}) {
    add_case(r, "endpoint identities, w=" + std::to_string(w).substr(0, 3) + ", m,l<=3", r.tol, [w, &r] {
      double worst = 0.0;
      for (int m = 0; m <= 3; ++m) {
        for (int l = 0; l <= 3; ++l) {
          const IdentityResidual res = check_endpoint_singular_identities(w, m, l, r.tol);
          worst = std::max({worst, res.even, res.odd});
        }
      }
      return worst;
    });
  }
  add_case(r, "d=1 singular part, q=0, z=-1, n=2", 1e-12, [] { return check_singular_part_1d(-1.0, 2, 0); });
  add_case(r, "d=1 singular part, q=1, z=5, n=1", 1e-12, [] { return check_singular_part_1d(5.0, 1, 1); });
  const std::vector<std::tuple<int, double, LatticePoint>> cuts = {
      {0, 0.5, {0, 0}}, {0, 1.5, {2, 1}}, {2, 7.5, {1, 1}}, {2, 6.5, {2, 0}}};
  for (const auto& [q, x, n] : cuts) {
    // ratio of subtracted to raw jump; must drop below 1/10
    add_case(r, "cut jump ratio, q=" + std::to_string(q) + " x=" + std::to_string(x).substr(0, 3) +
                    " n=" + n.str() + ", delta in {1e-2, 1e-3}",
             0.1, [q = q, x = x, n = n] {
               const CutJump a = check_singular_part_2d(x, n, q, 1e-2);
               const CutJump b = check_singular_part_2d(x, n, q, 1e-3);
               if (!(b.subtracted < a.subtracted)) return std::numeric_limits<double>::infinity();
               return std::max(a.subtracted / a.raw, b.subtracted / b.raw);
             });
  }
}

void suite_walk(SuiteReport& r) {
  for (int d = 1; d <= 2; ++d) {
    for (double eps : {0.25, 0.5, 0.75}) {
      add_case(r, "d=" + std::to_string(d) + " eps=" + std::to_string(eps).substr(0, 4) + ", |n_j|<=3", r.tol,
               [d, eps] {
                 const WalkConfig cfg = WalkConfig::for_tolerance(d, eps, 1e-13);
                 const Complex z = -2.0 * d * eps / (1.0 - eps);
                 double worst = 0.0;
                 for (const LatticePoint& n : box(d, 3)) {
                   const WalkValue w = walk_expectation(cfg, n);
                   const double g = (2.0 * d / (1.0 - eps) * green_auto(d, z, n).value).real();
                   worst = std::max(worst, std::abs(w.value - g) - w.tail_bound);
                 }
                 return std::max(worst, 0.0);
               });
    }
  }
  add_case(r, "sum_n P(X_k = n) = 1, k<=12, d<=3 (exact)", 0.0, [] {
    int failures = 0;
    for (int d = 1; d <= 3; ++d) {
      for (int k = 0; k <= 12; ++k) {
        Rational total = 0;
        std::vector<std::int64_t> c(static_cast<std::size_t>(d), -k);
        while (true) {
          total += walk_prob_exact(d, k, LatticePoint(c));
          std::size_t j = 0;
          while (j < c.size() && c[j] == k) c[j++] = -k;
          if (j == c.size()) break;
          ++c[j];
        }
        failures += total != 1;
      }
    }
    return static_cast<double>(failures);
  });
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::vector<std::string> suite_names() { return {"helmholtz", "oracle", "overlap", "identities", "walk"}; }

SuiteReport run_suite(const std::string& suite, std::optional<double> tol) {
  SuiteReport r;
  r.suite = suite;
  if (suite == "helmholtz") {
    r.tol = tol.value_or(1e-9);
    suite_helmholtz(r);
  } else if (suite == "oracle") {
    r.tol = tol.value_or(1e-9);
    suite_oracle(r);
  } else if (suite == "overlap") {
    r.tol = tol.value_or(1e-10);
    suite_overlap(r);
  } else if (suite == "identities") {
    r.tol = tol.value_or(1e-9);
    suite_identities(r);
  } else if (suite == "walk") {
    r.tol = tol.value_or(1e-10);
    suite_walk(r);
  } else {
    throw ParseError("unknown suite '" + suite + "' (expected helmholtz, oracle, overlap, identities, walk)");
  }
  return r;
}

}  // namespace latgreen::cli
