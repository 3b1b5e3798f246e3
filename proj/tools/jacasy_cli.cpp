// jacasy: evaluate Jacobi-type orthogonal polynomials by their large-degree
// expansions, dump coefficient tables, build Gauss rules, run convergence
// studies against a recurrence oracle.
//
// Exit codes: 0 ok, 1 selfcheck failure, 2 bad configuration, 3 numerical failure.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "jacasy/jacasy.hpp"
#include "jacasy/json_io.hpp"
#include "jacasy/selfcheck.hpp"

using namespace jacasy;

namespace {

struct Common {
  std::string weight;
  int terms = 4;
  double rho = 0.0;
  double disk_radius = 0.2;
  int max_contour_points = 1 << 14;
  std::string region = "auto";
  std::string format = "csv";
};

void add_common(CLI::App* app, Common& c, bool with_region = true, bool with_format = true, bool with_terms = true) {
  app->add_option("--weight", c.weight, "weight, e.g. \"jacobi(0,0)*exp(-7*x^4)\"")->required();
  if (with_terms) app->add_option("--terms", c.terms, "number of correction terms T (0..8)")->capture_default_str();
  app->add_option("--rho", c.rho, "contour ellipse parameter for the auxiliary data (0: automatic)");
  app->add_option("--disk-radius", c.disk_radius, "radius of the endpoint disks")->capture_default_str();
  app->add_option("--max-contour-points", c.max_contour_points, "cap on trapezoid points")->capture_default_str();
  if (with_region)
    app->add_option("--region", c.region, "auto|lens|outer|rightdisk|leftdisk|right-series|left-series")
        ->capture_default_str();
  if (with_format)
    app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

Engine make_engine(const Common& c) {
  EngineOptions o;
  o.T = c.terms;
  o.disk_radius = c.disk_radius;
  o.contour.rho = c.rho;
  o.contour.Mmax = c.max_contour_points;
  return Engine(parse_weight(c.weight), o);
}

// configuration problems exit 2, everything numerical exits 3
int report(const Error& e, const std::string& op) {
  const bool config = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidArgument ||
                      e.code() == ErrorCode::InvalidDegree;
  std::cerr << "jacasy " << op << ": " << e.what() << "\n";
  return config ? 2 : 3;
}

int run_eval(const Common& c, const std::string& n_text, const std::string& points, bool orthonormal, bool derivative) {
  const std::vector<int> ns = cli::parse_int_list(n_text);
  const std::vector<cplx> zs = cli::parse_points(points);
  const std::optional<RegionTag> region = parse_region(c.region);
  const Engine e = make_engine(c);
  json rows = json::array();
  if (c.format == "csv") std::cout << "n,point,value_re,value_im,scaled_re,scaled_im,log_scale,region,terms,next_term\n";
  for (int n : ns)
    for (cplx z : zs) {
      const auto [v, d] = e.eval_with_derivative(n, z, region, orthonormal);
      const EvalResult& r = derivative ? d : v;
      if (!r.warning.empty()) std::cerr << "warning: n=" << n << " z=" << cli::fmt(z) << ": " << r.warning << "\n";
      if (c.format == "csv") {
        std::cout << n << ',' << cli::fmt(z) << ',' << cli::fmt(r.value.real()) << ',' << cli::fmt(r.value.imag()) << ','
                  << cli::fmt(r.scaled.real()) << ',' << cli::fmt(r.scaled.imag()) << ',' << cli::fmt(r.log_scale) << ','
                  << to_string(r.region) << ',' << r.terms_used << ',' << cli::fmt(r.next_term_estimate) << '\n';
      } else {
        json j = to_json_value(r);
        j["n"] = n;
        j["point"] = to_json_value(z);
        rows.push_back(std::move(j));
      }
    }
  if (c.format == "json")
    std::cout << json{{"weight", to_string(e.spec())}, {"orthonormal", orthonormal}, {"derivative", derivative}, {"results", rows}}
                     .dump(2)
              << "\n";
  return 0;
}

int run_coeffs(const Common& c) {
  const Engine e = make_engine(c);
  const json j = {{"weight", to_string(e.spec())}, {"aux", to_json_value(e.aux())}, {"table", to_json_value(e.table())}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_quad(const Common& c, int n) {
  const Engine e = make_engine(c);
  const QuadRule r = gauss_rule(e, n);
  if (c.format == "csv") {
    std::cout << "node,weight\n";
    for (int k = 0; k < r.n; ++k) std::cout << cli::fmt(r.nodes[k]) << ',' << cli::fmt(r.weights[k]) << '\n';
  } else {
    json j = to_json_value(r);
    j["weight"] = to_string(e.spec());
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double m = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sx += x[i], sy += y[i], sxx += x[i] * x[i], sxy += x[i] * y[i];
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

int run_study(const Common& c, const std::string& point, const std::string& terms_text, const std::string& n_text) {
  const cplx z = cli::parse_complex(point);
  const std::vector<int> Ts = cli::parse_int_list(terms_text);
  const std::vector<int> ns = cli::parse_int_list(n_text, true);
  const std::optional<RegionTag> region = parse_region(c.region);
  const WeightSpec w = parse_weight(c.weight);
  int n_max = 0;
  for (int n : ns) n_max = std::max(n_max, n);
  const RecurrenceTable oracle = stieltjes(w, n_max);
  if (c.format == "csv") std::cout << "n,T,rel_error,next_term,region\n";
  json series = json::array();
  for (int T : Ts) {
    Common ct = c;
    ct.terms = T;
    const Engine e = make_engine(ct);
    std::vector<double> lx, ly;
    json rows = json::array();
    for (int n : ns) {
      const EvalResult r = e.eval_monic(n, z, region);
      const ScaledValue<cplx> ref = eval_recurrence_scaled(oracle, n, z);
      const double err = std::abs(r.scaled * std::exp(r.log_scale - ref.log_scale) - ref.scaled) / std::abs(ref.scaled);
      if (c.format == "csv")
        std::cout << n << ',' << T << ',' << cli::fmt(err) << ',' << cli::fmt(r.next_term_estimate) << ','
                  << to_string(r.region) << '\n';
      rows.push_back({{"n", n}, {"rel_error", err}, {"next_term", r.next_term_estimate}, {"region", to_string(r.region)}});
      if (err > 0) lx.push_back(std::log(double(n))), ly.push_back(std::log(err));
    }
    json s = {{"T", T}, {"rows", rows}};
    if (lx.size() >= 2) s["slope"] = fitted_slope(lx, ly);
    series.push_back(std::move(s));
  }
  if (c.format == "json") std::cout << json{{"weight", to_string(w)}, {"point", to_json_value(z)}, {"series", series}}.dump(2) << "\n";
  return 0;
}

int run_selfcheck(double perturb_u) {
  SelfcheckOptions o;
  o.perturb_u = perturb_u;
  bool ok = true;
  for (const SuiteResult& s : selfcheck(o)) {
    ok = ok && s.passed();
    std::cout << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << s.checks << " checks, max residual "
              << cli::fmt(s.max_residual) << " (tolerance " << s.tolerance << ")";
    if (!s.passed()) std::cout << ", failing: " << s.worst;
    std::cout << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi-type orthogonal polynomials from large-degree asymptotic expansions"};
  app.require_subcommand(1);

  Common ce, cc, cq, cs;
  std::string eval_n, eval_points, study_point, study_terms = "1..5", study_n = "16..256";
  bool orthonormal = false, derivative = false;
  int quad_n = 0;
  double perturb_u = 0.0;

  auto* eval = app.add_subcommand("eval", "evaluate pi_n (or p_n, or a derivative) at points");
  add_common(eval, ce);
  eval->add_option("--n", eval_n, "degrees: 50 | 10,20 | 10..20")->required();
  eval->add_option("--points", eval_points, "points: 0.3,0.2+0.5i | linspace(a,b,k) | grid(a,b,k,c,d,m)")->required();
  eval->add_flag("--orthonormal", orthonormal, "orthonormal p_n instead of monic pi_n");
  eval->add_flag("--derivative", derivative, "report the derivative");

  auto* coeffs = app.add_subcommand("coeffs", "auxiliary data and U/W/Q tables as JSON");
  add_common(coeffs, cc, false, false);

  auto* quad = app.add_subcommand("quad", "Gauss rule (node,weight per line)");
  add_common(quad, cq, false);
  quad->add_option("--n", quad_n, "number of nodes")->required();

  auto* study = app.add_subcommand("study", "relative error against a recurrence oracle over n and T");
  add_common(study, cs, true, true, false);
  study->add_option("--point", study_point, "evaluation point (real or re+imi)")->required();
  study->add_option("--terms", study_terms, "term counts, e.g. 1..7")->capture_default_str();
  study->add_option("--n", study_n, "degrees; a range a..b doubles: 16..512 = 16,32,...,512")->capture_default_str();

  auto* check = app.add_subcommand("selfcheck", "golden coefficients, branch cuts, Chebyshev exactness");
  check->add_option("--perturb-u", perturb_u, "add this to one computed U entry (fault injection)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string op = app.get_subcommands().front()->get_name();
  try {
    if (eval->parsed()) return run_eval(ce, eval_n, eval_points, orthonormal, derivative);
    if (coeffs->parsed()) return run_coeffs(cc);
    if (quad->parsed()) return run_quad(cq, quad_n);
    if (study->parsed()) return run_study(cs, study_point, study_terms, study_n);
    return run_selfcheck(perturb_u);
  } catch (const Error& e) {
    return report(e, op);
  } catch (const std::exception& e) {
    std::cerr << "jacasy " << op << ": " << e.what() << "\n";
    return 3;
  }
}
