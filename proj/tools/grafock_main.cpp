// Batch front end: property-suite runs, covariance/kernel tables, stochastic
// integrals, and file-driven algebra evaluation. Exit codes: 0 success,
// 1 check or verification failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "grafock/conjugation.hpp"
#include "grafock/element.hpp"
#include "grafock/errors.hpp"
#include "grafock/fock.hpp"
#include "grafock/process.hpp"
#include "grafock/properties.hpp"
#include "grafock/serialization.hpp"
#include "grafock/weights.hpp"

namespace {

using grafock::Complex;
using grafock::GrassmannElement;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw grafock::ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw grafock::ParseError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw grafock::Error("IoError", "cannot write " + path);
  out << text;
}

std::vector<double> parse_grid(const std::string& spec) {
  double a = 0.0, b = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0)
    throw CLI::ValidationError("--grid", "expected a:b:step with step > 0, got " + spec);
  std::vector<double> out;
  for (double t = a; t <= b + 1e-12; t += step) out.push_back(t);
  if (out.empty()) throw CLI::ValidationError("--grid", "empty grid " + spec);
  return out;
}

struct GlobalConfig {
  std::string config_path;
  int g_max = 64;
  double lambda = 1.0;
  json model_defaults = json::object();

  void apply() {
    if (!config_path.empty()) {
      const json j = load_json_file(config_path);
      g_max = j.value("G_max", g_max);
      if (j.contains("weights")) {
        // weight block shape: {"phi":"linear","lambda":1.0,"G_max":64}
        lambda = j["weights"].value("lambda", lambda);
        g_max = j["weights"].value("G_max", g_max);
      }
      if (j.contains("model")) model_defaults = j["model"];
      if (j.contains("prune_threshold"))
        grafock::algebra_config().prune_threshold = j["prune_threshold"].get<double>();
      if (j.contains("invert_epsilon"))
        grafock::algebra_config().invert_epsilon = j["invert_epsilon"].get<double>();
    }
    if (g_max < 1 || g_max > 64)
      throw CLI::ValidationError("--g-max", "must be in [1, 64]");
    grafock::algebra_config().g_max = g_max;
  }
};

// ---- check -----------------------------------------------------------------

int cmd_check(const std::string& suite, std::uint64_t seed, long long samples,
              double lambda, const std::string& out_path) {
  grafock::properties::SuiteOptions opt{seed, samples, lambda};
  std::vector<grafock::properties::InvariantResult> results;
  try {
    results = grafock::properties::run_suite(suite, opt);
  } catch (const grafock::BoundDiverges& e) {
    std::cerr << "usage error: " << e.what()
              << " (the Vage theorem requires the weight growth rate to exceed "
                 "ln(2)/(2d))\n";
    return kExitUsage;
  }
  json invariants = json::array();
  bool pass = true;
  for (const auto& r : results) {
    invariants.push_back({{"name", r.name},
                          {"samples", r.samples},
                          {"worst", r.worst},
                          {"tolerance", r.tolerance},
                          {"margin", r.margin()},
                          {"pass", r.pass}});
    pass = pass && r.pass;
    std::cout << (r.pass ? "ok   " : "FAIL ") << r.name << "  worst=" << r.worst
              << " tol=" << r.tolerance << " (" << r.samples << " samples)\n";
  }
  const json report = {{"suite", suite},     {"seed", seed},
                       {"samples", samples}, {"lambda", lambda},
                       {"invariants", invariants}, {"pass", pass}};
  if (!out_path.empty()) write_text_file(out_path, report.dump(2) + "\n");
  else std::cout << report.dump(2) << '\n';
  return pass ? kExitOk : kExitFailure;
}

// ---- covariance --------------------------------------------------------------

int cmd_covariance(std::optional<double> hurst, bool bm, const std::string& t_spec,
                   const std::string& s_spec, int n_max, const GlobalConfig& cfg,
                   std::optional<double> u_opt, std::optional<int> m_opt,
                   double t_max, const std::string& out_path) {
  if (bm == hurst.has_value())
    throw CLI::ValidationError("--H/--bm", "choose exactly one density");
  const double h = bm ? 0.5 : *hurst;
  const auto ts = parse_grid(t_spec);
  const auto ss = parse_grid(s_spec);

  grafock::QuadratureSpec quad;
  quad.half_width = u_opt.value_or(cfg.model_defaults.value("U", 40.0));
  quad.node_budget = m_opt.value_or(cfg.model_defaults.value("M", 16384));
  const grafock::SpectralDensity density =
      bm ? grafock::SpectralDensity::constant() : grafock::SpectralDensity::power_law(h);
  const grafock::ProcessModel model(density, n_max, quad, t_max);

  // distinct times, one streaming pass
  std::vector<double> all(ts);
  all.insert(all.end(), ss.begin(), ss.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  const auto table = model.f_coeff_table(all);
  const auto coeffs_at = [&](double t) -> const std::vector<double>& {
    const auto it = std::lower_bound(all.begin(), all.end(), t);
    return table[static_cast<std::size_t>(it - all.begin())];
  };

  std::ostringstream csv;
  csv << "t,s,K_series,K_oracle,K_closed_form,rel_err\n";
  double max_rel = 0.0;
  for (double t : ts) {
    for (double s : ss) {
      const auto& ft = coeffs_at(t);
      const auto& fs = coeffs_at(s);
      double series = 0.0;
      for (int n = 0; n < n_max; ++n) series += ft[n] * fs[n];
      const double oracle = grafock::covariance_oracle(density, t, s);
      const double closed = grafock::fbm_closed_form(t, s, h);
      double rel = 0.0;
      if (std::abs(series) >= 1e-12 || std::abs(oracle) >= 1e-12)
        rel = std::abs(series - oracle) / std::max(std::abs(oracle), 1e-300);
      max_rel = std::max(max_rel, rel);
      csv << grafock::format_csv_double(t) << ',' << grafock::format_csv_double(s)
          << ',' << grafock::format_csv_double(series) << ','
          << grafock::format_csv_double(oracle) << ','
          << grafock::format_csv_double(closed) << ','
          << grafock::format_csv_double(rel) << '\n';
    }
  }
  csv << "# max_rel_err," << grafock::format_csv_double(max_rel) << '\n';
  write_text_file(out_path, csv.str());
  std::cout << "wrote " << out_path << "  (max rel err " << max_rel << ")\n";
  return kExitOk;
}

// ---- integrate ---------------------------------------------------------------

GrassmannElement element_from_file(const std::string& path) {
  return grafock::element_from_json(load_json_file(path));
}

// Piecewise-constant element-valued function of t:
//   {"constant": <element>}  or  {"pieces":[{"t0":..,"t1":..,"element":..}, ...]}
std::function<GrassmannElement(double)> load_time_function(const std::string& path) {
  const json j = load_json_file(path);
  if (j.contains("constant")) {
    const GrassmannElement c = grafock::element_from_json(j["constant"]);
    return [c](double) { return c; };
  }
  if (!j.contains("pieces") || !j["pieces"].is_array() || j["pieces"].empty())
    throw grafock::ParseError("time function needs \"constant\" or \"pieces\"");
  struct Piece {
    double t0, t1;
    GrassmannElement value;
  };
  auto pieces = std::make_shared<std::vector<Piece>>();
  for (const auto& p : j["pieces"])
    pieces->push_back({p.at("t0").get<double>(), p.at("t1").get<double>(),
                       grafock::element_from_json(p.at("element"))});
  return [pieces](double t) {
    for (const auto& p : *pieces)
      if (t >= p.t0 && t <= p.t1) return p.value;
    throw grafock::ParseError("time " + std::to_string(t) +
                              " not covered by any piece");
  };
}

int cmd_integrate(std::optional<double> hurst, bool bm, const std::string& g_path,
                  const std::string& y_path, double a, double b, int steps,
                  int n_max, const GlobalConfig& cfg, std::optional<double> u_opt,
                  std::optional<int> m_opt, double t_max,
                  const std::string& out_path) {
  if (bm == hurst.has_value())
    throw CLI::ValidationError("--H/--bm", "choose exactly one density");
  if (steps < 4) throw CLI::ValidationError("--steps", "needs steps >= 4");
  const GrassmannElement g = element_from_file(g_path);
  const auto Y = load_time_function(y_path);

  grafock::QuadratureSpec quad;
  quad.half_width = u_opt.value_or(cfg.model_defaults.value("U", 40.0));
  quad.node_budget = m_opt.value_or(cfg.model_defaults.value("M", 16384));
  const grafock::SpectralDensity density =
      bm ? grafock::SpectralDensity::constant()
         : grafock::SpectralDensity::power_law(*hurst);
  const grafock::ProcessModel model(density, n_max, quad, t_max);

  json convergence = json::array();
  GrassmannElement prev, result;
  for (int k : {steps / 4, steps / 2, steps}) {
    result = model.pettis_integral(Y, g, a, b, k);
    json row = {{"steps", k}};
    if (k != steps / 4)
      row["increment_2norm"] = grafock::p_norm(result - prev, 2);
    convergence.push_back(std::move(row));
    prev = result;
  }
  json out = {{"element", grafock::element_to_json(result)},
              {"a", a},
              {"b", b},
              {"convergence", convergence}};
  write_text_file(out_path, out.dump(2) + "\n");
  std::cout << "wrote " << out_path << '\n';
  return kExitOk;
}

// ---- eval ----------------------------------------------------------------------

int cmd_eval(const std::string& program_path, const GlobalConfig& cfg,
             const std::string& out_path) {
  const json prog = load_json_file(program_path);
  if (!prog.contains("program") || !prog["program"].is_array())
    throw grafock::ParseError("program file needs a \"program\" op list");
  const grafock::WeightSystem weights =
      grafock::WeightSystem::linear(cfg.lambda, cfg.g_max);

  std::vector<GrassmannElement> stack;
  const auto pop = [&]() {
    if (stack.empty()) throw grafock::ParseError("operand stack underflow");
    GrassmannElement e = std::move(stack.back());
    stack.pop_back();
    return e;
  };

  for (const auto& op : prog["program"]) {
    const std::string name = op.at("op").get<std::string>();
    if (name == "load") {
      const std::string key = op.at("name").get<std::string>();
      if (!prog.contains("elements") || !prog["elements"].contains(key))
        throw grafock::ParseError("no element named '" + key + "'");
      stack.push_back(grafock::element_from_json(prog["elements"][key]));
    } else if (name == "multiply") {
      const auto rhs = pop();
      const auto lhs = pop();
      stack.push_back(multiply(lhs, rhs));
    } else if (name == "add") {
      const auto rhs = pop();
      const auto lhs = pop();
      stack.push_back(lhs + rhs);
    } else if (name == "conjugate") {
      const int k = op.at("k").get<int>();
      if (k < 0 || k > 7) throw grafock::ParseError("conjugate k must be 0..7");
      stack.push_back(conjugate(pop(), static_cast<grafock::ConjugationId>(k)));
    } else if (name == "invert") {
      stack.push_back(invert(pop()));
    } else if (name == "berezin") {
      const auto gens = op.at("gens").get<std::vector<int>>();
      stack.push_back(berezin_integral(grafock::MultiIndex::of(gens), pop()));
    } else if (name == "norm") {
      const double v = p_norm(pop(), op.at("p").get<int>());
      stack.push_back(GrassmannElement::scalar(v));
    } else if (name == "weighted_norm") {
      const double v = weighted_norm(pop(), op.at("p").get<int>(), weights);
      stack.push_back(GrassmannElement::scalar(v));
    } else {
      throw grafock::ParseError("unknown op '" + name + "'");
    }
  }
  if (stack.empty()) throw grafock::ParseError("program left nothing on the stack");
  const std::string text = grafock::element_to_json(stack.back()).dump(2) + "\n";
  if (!out_path.empty()) write_text_file(out_path, text);
  else std::cout << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-truncation Grassmann algebra toolkit"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  app.add_option("--config", cfg.config_path, "JSON config file");
  app.add_option("--g-max", cfg.g_max, "largest usable generator id (<= 64)");

  // check
  auto* check = app.add_subcommand("check", "run property suites");
  std::string suite = "all";
  std::uint64_t seed = 42;
  long long samples = 10000;
  double lambda = 1.0;
  std::string check_out;
  check->add_option("--suite", suite, "algebra|conjugations|norms|vage|operators|all")
      ->check(CLI::IsMember({"algebra", "conjugations", "norms", "vage", "operators",
                             "all"}));
  check->add_option("--seed", seed, "RNG seed");
  check->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
  check->add_option("--lambda", lambda, "weight growth rate for the vage suite");
  check->add_option("--out", check_out, "write the JSON report here");

  // covariance
  auto* cov = app.add_subcommand("covariance", "emit a covariance/kernel table");
  std::optional<double> cov_h;
  bool cov_bm = false;
  std::string t_grid = "0.25:2:0.25", s_grid = "0.25:2:0.25", cov_out = "covariance.csv";
  int cov_nmax = 400;
  std::optional<double> cov_u;
  std::optional<int> cov_m;
  double cov_tmax = 4.0;
  cov->add_option("--H", cov_h, "Hurst exponent in (0,1)");
  cov->add_flag("--bm", cov_bm, "Brownian density m == 1");
  cov->add_option("--t-grid", t_grid, "a:b:step");
  cov->add_option("--s-grid", s_grid, "a:b:step");
  cov->add_option("--n-max", cov_nmax, "Hermite truncation order")
      ->check(CLI::PositiveNumber);
  cov->add_option("--U", cov_u, "frequency half-width");
  cov->add_option("--M", cov_m, "frequency node budget");
  cov->add_option("--t-max", cov_tmax, "time window");
  cov->add_option("--out", cov_out, "output CSV path");

  // integrate
  auto* integ = app.add_subcommand("integrate", "Riemann-sum stochastic integral");
  std::optional<double> int_h;
  bool int_bm = false;
  std::string g_path, y_path, int_out = "integral.json";
  double int_a = 0.0, int_b = 1.0;
  int int_steps = 256, int_nmax = 48;
  std::optional<double> int_u;
  std::optional<int> int_m;
  double int_tmax = 4.0;
  integ->add_option("--H", int_h, "Hurst exponent in (0,1)");
  integ->add_flag("--bm", int_bm, "Brownian density m == 1");
  integ->add_option("--g", g_path, "element JSON file")->required();
  integ->add_option("--Y", y_path, "time-function JSON file")->required();
  integ->add_option("--a", int_a, "lower limit");
  integ->add_option("--b", int_b, "upper limit");
  integ->add_option("--steps", int_steps, "Riemann steps")->check(CLI::PositiveNumber);
  integ->add_option("--n-max", int_nmax, "Hermite truncation order");
  integ->add_option("--U", int_u, "frequency half-width");
  integ->add_option("--M", int_m, "frequency node budget");
  integ->add_option("--t-max", int_tmax, "time window");
  integ->add_option("--out", int_out, "output JSON path");

  // eval
  auto* ev = app.add_subcommand("eval", "evaluate a JSON algebra program");
  std::string program_path, eval_out;
  ev->add_option("--program", program_path, "program JSON file")->required();
  ev->add_option("--out", eval_out, "output JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.apply();
    if (check->parsed()) return cmd_check(suite, seed, samples, lambda, check_out);
    if (cov->parsed())
      return cmd_covariance(cov_h, cov_bm, t_grid, s_grid, cov_nmax, cfg, cov_u,
                            cov_m, cov_tmax, cov_out);
    if (integ->parsed())
      return cmd_integrate(int_h, int_bm, g_path, y_path, int_a, int_b, int_steps,
                           int_nmax, cfg, int_u, int_m, int_tmax, int_out);
    if (ev->parsed()) return cmd_eval(program_path, cfg, eval_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const grafock::Error& e) {
    std::cerr << e.code() << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
