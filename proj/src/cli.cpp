#include "relhur/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "relhur/hopfion.hpp"
#include "relhur/hydrogen.hpp"
#include "relhur/quadrature.hpp"
#include "relhur/rel_uncertainty.hpp"
#include "relhur/specfun.hpp"
#include "relhur/sweep_table.hpp"

namespace relhur::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string output;

  std::optional<double> d;
  bool d_inf = false;
  double tol = 1e-7;

  double d_min = 0.0;
  double d_max = 0.0;
  int points = 0;
  bool log_spacing = false;

  int Z = 0;
  double alpha = hydrogen::kAlphaCodata2018;
  bool oracle = false;

  std::optional<double> a;
  std::optional<double> a_min;
  std::optional<double> a_max;

  bool strict = false;
};

std::vector<double> spaced(double lo, double hi, int n, bool log) {
  if (n < 1) throw UsageError("--points must be >= 1");
  if (!(hi >= lo)) throw UsageError("range maximum below minimum");
  if (log && !(lo > 0.0)) throw UsageError("--log needs a positive minimum");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    v[static_cast<std::size_t>(i)] = log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  v.back() = hi;
  return v;
}

void emit_record(const json& record, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << record.dump(2) << '\n';
    return;
  }
  std::string header, row;
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += it.key();
    if (it->is_number_float()) {
      row += format_number(it->get<double>());
    } else if (it->is_string()) {
      row += it->get<std::string>();
    } else {
      row += it->dump();
    }
  }
  out << header << '\n' << row << '\n';
}

void emit_table(const SweepTable& table, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << table.to_json()["rows"].dump(2) << '\n';
  } else {
    table.write_csv(out);
  }
}

json dispersion_json(const dirac::DispersionReport& r) {
  return {{"norm_sq", round_sig12(r.norm_sq)},
          {"mean_p", {round_sig12(r.mean_p.x()), round_sig12(r.mean_p.y()), round_sig12(r.mean_p.z())}},
          {"mean_r", {round_sig12(r.mean_r.x()), round_sig12(r.mean_r.y()), round_sig12(r.mean_r.z())}},
          {"delta_p_sq", round_sig12(r.delta_p_sq)},
          {"delta_r_sq", round_sig12(r.delta_r_sq)},
          {"gamma", round_sig12(r.gamma)}};
}

void run_bound(const Options& o, std::ostream& out) {
  if (o.d.has_value() == o.d_inf) throw UsageError("bound: give exactly one of --d or --d-inf");
  if (o.d && !(*o.d >= 0.0)) throw UsageError("bound: --d must be >= 0");
  if (!(o.tol >= 1e-8)) throw UsageError("bound: --tol must be >= 1e-8");
  const rel::RelativisticScale d = o.d_inf ? rel::RelativisticScale::infinity() : rel::RelativisticScale::finite(*o.d);
  const radial::EigenResult r = rel::solve_bound(d, o.tol);
  json rec;
  rec["d"] = o.d_inf ? json("inf") : json(round_sig12(*o.d));
  rec["gamma"] = round_sig12(r.gamma);
  rec["tol"] = o.tol;
  rec["err_est"] = round_sig12(r.diagnostics.est_error);
  emit_record(rec, o.format, out);
}

void run_sweep(const Options& o, std::ostream& out) {
  if (!(o.d_min >= 0.0)) throw UsageError("sweep: --d-min must be >= 0");
  if (!(o.tol >= 1e-8)) throw UsageError("sweep: --tol must be >= 1e-8");
  const std::vector<double> ds = spaced(o.d_min, o.d_max, o.points, o.log_spacing);
  std::vector<rel::RelativisticScale> scales;
  for (double d : ds) scales.push_back(rel::RelativisticScale::finite(d));
  const rel::BoundCurve curve = rel::sweep(scales, o.tol);
  SweepTable table;
  table.param_name = "d";
  table.metadata["gamma_at_0"] = curve.gamma_at_0;
  table.metadata["gamma_at_inf"] = curve.gamma_at_inf;
  for (const auto& row : curve.rows) table.rows.push_back({row.d.value(), false, row.gamma, row.err_est});
  emit_table(table, o.format, out);
}

void run_hydrogen(const Options& o, std::ostream& out) {
  if (o.Z <= 0) throw UsageError("hydrogen: --Z must be a positive integer");
  if (!(o.alpha > 0.0)) throw UsageError("hydrogen: --alpha must be positive");
  if (!(o.alpha * o.Z < 1.0)) throw UsageError("hydrogen: alpha Z >= 1, no bound ground state");
  const hydrogen::CoulombState s = hydrogen::CoulombState::from_z(o.Z, o.alpha);
  if (!(s.gamma_c > 0.5)) throw UsageError("hydrogen: gamma_c <= 1/2, dp^2 diverges");
  json rec;
  rec["Z"] = o.Z;
  rec["alpha"] = o.alpha;
  rec["gamma_c"] = round_sig12(s.gamma_c);
  rec["d"] = round_sig12(hydrogen::d_parameter(s));
  rec["gamma"] = round_sig12(hydrogen::uncertainty_product_closed(s));
  if (s.gamma_c < 1.0) {
    const hydrogen::ClosedMoments m = hydrogen::closed_moments(s);
    rec["gamma_moments"] = round_sig12(m.gamma);
    rec["delta_r_sq"] = round_sig12(m.delta_r_sq);
    rec["delta_p_sq"] = round_sig12(m.delta_p_sq);
  }
  rec["max_z_finite"] = hydrogen::max_z_finite(o.alpha);
  if (o.oracle) rec["oracle"] = dispersion_json(hydrogen::quadrature_oracle(s));
  if (o.format == "csv" && o.oracle) rec["oracle"] = round_sig12(hydrogen::quadrature_oracle(s).gamma);
  emit_record(rec, o.format, out);
}

void run_hopfion(const Options& o, std::ostream& out) {
  const bool single = o.a.has_value();
  const bool range = o.a_min || o.a_max || o.points > 0;
  if (single == range) throw UsageError("hopfion: give either --a or --a-min/--a-max/--points");
  const auto in_range = [](double a) { return a >= 0.05 && a <= 100.0; };
  if (single) {
    if (!in_range(*o.a)) throw UsageError("hopfion: --a must lie in [0.05, 100]");
    const hopfion::HopfionState st(*o.a);
    const hopfion::HopfionDispersion d = hopfion::gamma_h_detailed(st);
    json rec = dispersion_json(d.report);
    rec["a"] = round_sig12(*o.a);
    rec["err_est"] = round_sig12(d.err_est);
    emit_record(o.format == "csv" ? json{{"a", rec["a"]}, {"gamma", rec["gamma"]}, {"err_est", rec["err_est"]}} : rec,
                o.format, out);
    return;
  }
  if (!o.a_min || !o.a_max) throw UsageError("hopfion: range needs --a-min and --a-max");
  if (!in_range(*o.a_min) || !in_range(*o.a_max)) throw UsageError("hopfion: a range must lie in [0.05, 100]");
  const std::vector<double> as = spaced(*o.a_min, *o.a_max, o.points, true);
  emit_table(hopfion::gamma_h_curve(as), o.format, out);
}

struct Check {
  std::string name;
  double value;
  double expected;
  double tol;
  bool pass() const { return std::abs(value - expected) <= tol; }
};

std::vector<Check> anchor_checks() {
  std::vector<Check> checks;
  checks.push_back({"gamma_bound(d=0)", rel::gamma_bound(rel::RelativisticScale::finite(0.0)), 1.5, 1e-7});
  checks.push_back({"gamma_bound(d=inf)", rel::gamma_bound(rel::RelativisticScale::infinity()),
                    rel::kGammaUltrarelativistic, 1e-6});
  checks.push_back({"hydrogen closed form at gamma_c=1",
                    hydrogen::uncertainty_product_closed(hydrogen::CoulombState::from_gamma(1.0)), std::sqrt(3.5),
                    1e-9});
  double worst = 0.0;
  for (double x : {1e-3, 0.1, 1.0, 5.0, 50.0, 200.0}) {
    const double k2 = specfun::bessel_k(2, x);
    const double rec = specfun::bessel_k(0, x) + 2.0 / x * specfun::bessel_k(1, x);
    worst = std::max(worst, std::abs(k2 - rec) / k2);
  }
  checks.push_back({"K2 recurrence (max rel dev)", worst, 0.0, 1e-10});
  const quadrature::QuadResult k2_int = quadrature::integrate_semi_infinite(
      [](double t) {
        const double c = std::cosh(t);
        return 0.5 * (std::exp(-2.0 * c + 2.0 * t) + std::exp(-2.0 * c - 2.0 * t));
      });
  checks.push_back({"K2(2) integral representation (rel dev)",
                    std::abs(k2_int.value - specfun::bessel_k(2, 2.0)) / specfun::bessel_k(2, 2.0), 0.0, 1e-9});
  return checks;
}

int run_verify(const Options& o, std::ostream& out) {
  const std::vector<Check> checks = anchor_checks();
  bool all = true;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& c : checks) {
      arr.push_back({{"check", c.name},
                     {"value", round_sig12(c.value)},
                     {"expected", round_sig12(c.expected)},
                     {"tol", c.tol},
                     {"pass", c.pass()}});
      all = all && c.pass();
    }
    out << arr.dump(2) << '\n';
  } else {
    out << "check,value,expected,tol,status\n";
    for (const auto& c : checks) {
      out << c.name << ',' << format_number(c.value) << ',' << format_number(c.expected) << ',' << format_number(c.tol)
          << ',' << (c.pass() ? "PASS" : "FAIL") << '\n';
      all = all && c.pass();
    }
  }
  return (o.strict && !all) ? kExitNumerical : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Relativistic uncertainty bounds for Dirac electrons", "relhur"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", o.output, "Write the document to this path instead of stdout");

  auto* bound = app.add_subcommand("bound", "Lower bound gamma(d) at one d");
  bound->add_option("--d", o.d, "Relativistic scale d >= 0");
  bound->add_flag("--d-inf", o.d_inf, "Ultrarelativistic limit d = infinity");
  bound->add_option("--tol", o.tol, "Absolute eigenvalue tolerance (>= 1e-8)");

  auto* sweep = app.add_subcommand("sweep", "gamma(d) over a range of d");
  sweep->add_option("--d-min", o.d_min)->required();
  sweep->add_option("--d-max", o.d_max)->required();
  sweep->add_option("--points", o.points)->required();
  sweep->add_flag("--log", o.log_spacing, "Logarithmic spacing");
  sweep->add_option("--tol", o.tol);

  auto* hyd = app.add_subcommand("hydrogen", "Hydrogen-like ion ground state");
  hyd->add_option("--Z", o.Z, "Nuclear charge")->required();
  hyd->add_option("--alpha", o.alpha, "Fine-structure constant");
  hyd->add_flag("--oracle", o.oracle, "Also run the quadrature oracle");

  auto* hop = app.add_subcommand("hopfion", "Dirac hopfion gamma_H(a)");
  hop->add_option("--a", o.a, "Width parameter in Compton wavelengths");
  hop->add_option("--a-min", o.a_min);
  hop->add_option("--a-max", o.a_max);
  hop->add_option("--points", o.points, "Log-spaced points between --a-min and --a-max");

  auto* verify = app.add_subcommand("verify", "Run the built-in anchor checks");
  verify->add_flag("--strict", o.strict, "Exit 1 if any check fails");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::out | std::ios::trunc);
    if (!file) {
      err << "usage error: cannot write output path " << o.output << '\n';
      return kExitUsage;
    }
  }
  std::ostream& doc = o.output.empty() ? out : file;
  // The document is assembled in memory so a failure leaves no partial output.
  std::ostringstream buffer;
  try {
    int status = kExitOk;
    if (*bound) {
      run_bound(o, buffer);
    } else if (*sweep) {
      if (!app.get_option("--format")->count()) o.format = "csv";
      run_sweep(o, buffer);
    } else if (*hyd) {
      run_hydrogen(o, buffer);
    } else if (*hop) {
      run_hopfion(o, buffer);
    } else if (*verify) {
      if (!app.get_option("--format")->count()) o.format = "csv";
      status = run_verify(o, buffer);
    }
    doc << buffer.str();
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DivergenceError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonConvergence& e) {
    err << "numerical failure: " << e.what() << " (best estimate " << e.best_estimate() << ", est. error "
        << e.est_error() << ")\n";
    return kExitNumerical;
  }
}

}  // namespace relhur::cli
