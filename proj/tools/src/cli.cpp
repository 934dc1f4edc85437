#include "latgreen_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "latgreen/fundamental_solutions.hpp"
#include "latgreen/oracles.hpp"
#include "latgreen/resolvent.hpp"
#include "verify.hpp"

namespace latgreen::cli {

namespace {

using json = nlohmann::json;

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const LatticePoint& n) { return json(n.coords()); }

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

json to_json(const Channels& c) {
  return {{"rational", rational_str(c.rational)},
          {"inv_pi", rational_str(c.inv_pi)},
          {"log2_inv_pi", rational_str(c.log2_inv_pi)}};
}

std::string json_double(double v) { return json(v).dump(); }

struct EvalOptions {
  int dim = 2;
  std::string z;
  std::string n;
  std::string method = "auto";
  double tol = kDefaultTol;
  std::string format = "json";
};

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const Complex z = parse_complex(o.z);
  const LatticePoint n = parse_point(o.n);
  if (o.dim < 1) throw ParseError("--dim must be >= 1");
  if (n.dim() != static_cast<std::size_t>(o.dim)) {
    throw ParseError("--n has " + std::to_string(n.dim()) + " coordinates but --dim is " +
                     std::to_string(o.dim));
  }
  if (!(o.tol > 0.0)) throw ParseError("--tol must be > 0");

  GreenValue g;
  if (o.method == "auto") {
    g = green_auto(o.dim, z, n, o.tol);
  } else {
    const auto rep = representation_from_string(o.method);
    if (!rep) throw ParseError("unknown method '" + o.method + "'");
    if (*rep == Representation::quadrature) {
      const OracleValue q = quadrature_torus_auto(o.dim, z, n, o.tol);
      g = {q.value, Representation::quadrature, q.work, q.err_estimate};
    } else if (*rep == Representation::bessel_laplace) {
      const OracleValue q = laplace_bessel(o.dim, z, n, o.tol);
      g = {q.value, Representation::bessel_laplace, q.work, q.err_estimate};
    } else {
      g = green_with(*rep, o.dim, z, n, o.tol);
    }
  }

  if (o.format == "csv") {
    out << "dim,z_re,z_im,n,value_re,value_im,method,terms,err_estimate\n";
    std::string coords;
    for (std::size_t j = 0; j < n.dim(); ++j) coords += (j ? ";" : "") + std::to_string(n[j]);
    out << o.dim << ',' << json_double(z.real()) << ',' << json_double(z.imag()) << ',' << coords
        << ',' << json_double(g.value.real()) << ',' << json_double(g.value.imag()) << ','
        << to_string(g.representation) << ',' << g.terms_used << ',' << json_double(g.err_estimate)
        << '\n';
  } else {
    const json rec = {{"dim", o.dim},
                      {"z", to_json(z)},
                      {"n", to_json(n)},
                      {"value", to_json(g.value)},
                      {"method_used", to_string(g.representation)},
                      {"terms", g.terms_used},
                      {"err_estimate", g.err_estimate}};
    out << rec.dump(2) << '\n';
  }
  return kOk;
}

struct FundsolOptions {
  std::string op = "h0";
  int range = 1;
  std::string format = "csv";
  bool check = false;
};

int cmd_fundsol(const FundsolOptions& o, std::ostream& out) {
  if (o.range < 0 || o.range > 64) throw ParseError("--range must lie in [0, 64]");
  const FundSolOperator op = [&] {
    try {
      return fundsol_operator_from_string(o.op);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }();

  // The kernels are symmetric up to the sign factors applied in fundsol(),
  // so memoize on the raw point.
  std::map<std::pair<std::int64_t, std::int64_t>, FundSolValue> cache;
  const FundSolFn value = [&](const LatticePoint& n) {
    const auto key = std::make_pair(n[0], n[1]);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, fundsol(op, n)).first;
    return it->second;
  };

  const int R = o.range;
  const bool complex_op = op == FundSolOperator::h0_minus4 || op == FundSolOperator::dalembertian;

  if (o.check) {
    json failures = json::array();
    std::int64_t points = 0;
    for (int a = -R; a <= R; ++a) {
      for (int b = -R; b <= R; ++b) {
        const LatticePoint n{a, b};
        FundSolValue expect;
        if (n.is_origin()) expect.re.rational = 1;
        const FundSolValue res = apply_stencil(op, value, n);
        ++points;
        if (!(res == expect)) {
          failures.push_back({{"n", to_json(n)}, {"re", to_json(res.re)}, {"im", to_json(res.im)}});
        }
      }
    }
    const bool pass = failures.empty();
    const json rep = {{"op", to_string(op)},
                      {"range", R},
                      {"check", "stencil residual equals delta_0 exactly"},
                      {"points", points},
                      {"pass", pass},
                      {"failures", failures}};
    out << rep.dump(2) << '\n';
    return pass ? kOk : kTolerance;
  }

  if (o.format == "json") {
    json values = json::array();
    for (int a = -R; a <= R; ++a) {
      for (int b = -R; b <= R; ++b) {
        const FundSolValue v = value({a, b});
        values.push_back({{"n", json::array({a, b})},
                          {"re", to_json(v.re)},
                          {"im", to_json(v.im)},
                          {"value", to_json(v.to_complex())}});
      }
    }
    out << json{{"op", to_string(op)}, {"range", R}, {"values", values}}.dump(2) << '\n';
    return kOk;
  }

  out << "n1,n2,rational,inv_pi,log2_inv_pi,float_total";
  if (complex_op) out << ",im_rational,im_inv_pi,im_log2_inv_pi,float_total_im";
  out << '\n';
  for (int a = -R; a <= R; ++a) {
    for (int b = -R; b <= R; ++b) {
      const FundSolValue v = value({a, b});
      out << a << ',' << b << ',' << rational_str(v.re.rational) << ',' << rational_str(v.re.inv_pi)
          << ',' << rational_str(v.re.log2_inv_pi) << ',' << json_double(v.re.to_double());
      if (complex_op) {
        out << ',' << rational_str(v.im.rational) << ',' << rational_str(v.im.inv_pi) << ','
            << rational_str(v.im.log2_inv_pi) << ',' << json_double(v.im.to_double());
      }
      out << '\n';
    }
  }
  return kOk;
}

struct VerifyOptions {
  std::string suite;
  std::optional<double> tol;
  std::string format = "json";
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.tol && !(*o.tol > 0.0)) throw ParseError("--tol must be > 0");
  const SuiteReport r = run_suite(o.suite, o.tol);
  if (o.format == "csv") {
    out << "suite,case,residual,tol,pass\n";
    for (const CaseResult& c : r.cases) {
      out << r.suite << ",\"" << c.name << "\"," << json_double(c.residual) << ','
          << json_double(c.tol) << ',' << (c.pass ? "true" : "false") << '\n';
    }
  } else {
    json cases = json::array();
    for (const CaseResult& c : r.cases) {
      json j = {{"name", c.name}, {"tol", c.tol}, {"pass", c.pass}};
      // JSON has no infinity; a failed evaluation reports null
      j["residual"] = std::isfinite(c.residual) ? json(c.residual) : json(nullptr);
      if (!c.note.empty()) j["note"] = c.note;
      cases.push_back(std::move(j));
    }
    const json rep = {{"suite", r.suite}, {"tol", r.tol}, {"pass", r.pass()}, {"cases", cases}};
    out << rep.dump(2) << '\n';
  }
  return r.pass() ? kOk : kTolerance;
}

struct WalkOptions {
  int dim = 2;
  std::string n;
  double eps = 0.5;
  std::optional<std::int64_t> kmax;
  double tol = 1e-12;
  std::string format = "json";
};

int cmd_walk(const WalkOptions& o, std::ostream& out) {
  const LatticePoint n = parse_point(o.n);
  if (n.dim() != static_cast<std::size_t>(o.dim)) {
    throw ParseError("--n has " + std::to_string(n.dim()) + " coordinates but --dim is " +
                     std::to_string(o.dim));
  }
  if (!(o.eps > 0.0 && o.eps <= 1.0)) throw ParseError("--eps must lie in (0, 1]");
  WalkConfig cfg = WalkConfig::for_tolerance(o.dim, o.eps, o.tol);
  if (o.kmax) {
    if (*o.kmax < 0) throw ParseError("--kmax must be >= 0");
    cfg.kmax = *o.kmax;
  }
  const WalkValue w = walk_expectation(cfg, n);
  json rec = {{"dim", o.dim},       {"n", to_json(n)},          {"eps", o.eps},
              {"kmax", cfg.kmax},   {"value", w.value},         {"tail_bound", w.tail_bound},
              {"terms", w.terms}};
  std::optional<double> kernel;
  if (o.eps < 1.0) {
    // E(eps, n) = 2d/(1-eps) G(-2d eps/(1-eps), n)
    const Complex z = -2.0 * o.dim * o.eps / (1.0 - o.eps);
    try {
      kernel = (2.0 * o.dim / (1.0 - o.eps) * green_auto(o.dim, z, n).value).real();
      rec["kernel_z"] = to_json(z);
      rec["kernel_value"] = *kernel;
    } catch (const RegionError&) {
      rec["kernel_value"] = nullptr;
    }
  }
  if (o.format == "csv") {
    out << "dim,eps,kmax,value,tail_bound,terms,kernel_value\n";
    out << o.dim << ',' << json_double(o.eps) << ',' << cfg.kmax << ',' << json_double(w.value) << ','
        << json_double(w.tail_bound) << ',' << w.terms << ','
        << (kernel ? json_double(*kernel) : std::string()) << '\n';
  } else {
    out << rec.dump(2) << '\n';
  }
  return kOk;
}

const std::vector<std::string> kMethods = {"auto",         "laurent",     "closed1d",
                                           "thresh0-1d",   "thresh4-1d",  "embedded2d",
                                           "endpoint2d",   "recurrence2d", "laurent2d",
                                           "embedded2d-boundary", "quadrature", "bessel-laplace"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice resolvent kernels, fundamental solutions and verification suites", "latgreen"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "latgreen 0.1.0");

  EvalOptions eval;
  auto* e = app.add_subcommand("eval", "Evaluate G(z, n)");
  e->add_option("--dim", eval.dim, "Lattice dimension")->default_val(2);
  e->add_option("--z", eval.z, "Spectral parameter, a+bi")->required();
  e->add_option("--n", eval.n, "Lattice point, comma separated")->required();
  e->add_option("--method", eval.method, "Representation")
      ->check(CLI::IsMember(kMethods))
      ->default_val("auto");
  e->add_option("--tol", eval.tol, "Relative tolerance")->default_val(kDefaultTol);
  e->add_option("--format", eval.format)->check(CLI::IsMember({"json", "csv"}))->default_val("json");

  FundsolOptions fs;
  auto* f = app.add_subcommand("fundsol", "Tabulate a closed-form fundamental solution");
  f->add_option("--op", fs.op, "h0, h0-4, h0-8 or dalembertian")
      ->check(CLI::IsMember({"h0", "h0-4", "h0-8", "dalembertian"}))
      ->default_val("h0");
  f->add_option("--range", fs.range, "Table covers |n_j| <= range (<= 64)")->default_val(1);
  f->add_option("--format", fs.format)->check(CLI::IsMember({"json", "csv"}))->default_val("csv");
  f->add_flag("--check", fs.check, "Report the exact stencil residual instead of the table");

  VerifyOptions vf;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", vf.suite)->check(CLI::IsMember(suite_names()))->required();
  v->add_option("--tol", vf.tol, "Override the suite tolerance");
  v->add_option("--format", vf.format)->check(CLI::IsMember({"json", "csv"}))->default_val("json");

  WalkOptions wk;
  auto* w = app.add_subcommand("walk", "Expected visits of a killed random walk");
  w->add_option("--dim", wk.dim)->check(CLI::Range(1, 3))->default_val(2);
  w->add_option("--n", wk.n, "Lattice point, comma separated")->required();
  w->add_option("--eps", wk.eps, "Kill probability per step")->default_val(0.5);
  w->add_option("--kmax", wk.kmax, "Truncation (default: from --tol)");
  w->add_option("--tol", wk.tol, "Bound on the truncated tail")->default_val(1e-12);
  w->add_option("--format", wk.format)->check(CLI::IsMember({"json", "csv"}))->default_val("json");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kParse;
  }

  try {
    if (*e) return cmd_eval(eval, out);
    if (*f) return cmd_fundsol(fs, out);
    if (*v) return cmd_verify(vf, out);
    if (*w) return cmd_walk(wk, out);
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kParse;
  } catch (const RegionError& ex) {
    err << "error: " << ex.what() << '\n';
    return kRegion;
  } catch (const ConvergenceError& ex) {
    err << "error: " << ex.what() << " (estimate " << ex.err_estimate() << ")\n";
    return kTolerance;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << '\n';
    return kParse;
  }
  return kParse;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace latgreen::cli
