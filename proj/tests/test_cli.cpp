#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "grafock/serialization.hpp"
#include "test_util.hpp"

using namespace grafock;
using grafock::testing::gen;
using grafock::testing::sc;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() /
             ("grafock_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout.txt";
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string(GRAFOCK_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

}  // namespace

TEST_CASE("check subcommand") {
  const auto report_path = scratch_dir() / "report.json";
  const auto r = run_cli("check --suite algebra --seed 7 --samples 400 --out " +
                         report_path.string());
  CHECK(r.exit_code == 0);
  const json report = json::parse(slurp(report_path));
  CHECK(report["suite"] == "algebra");
  CHECK(report["pass"] == true);
  CHECK(report["invariants"].size() >= 4);

  // the full run carries at least a dozen invariant entries
  const auto all = run_cli("check --suite all --seed 7 --samples 200 --out " +
                           (scratch_dir() / "all.json").string());
  CHECK(all.exit_code == 0);
  const json all_report = json::parse(slurp(scratch_dir() / "all.json"));
  CHECK(all_report["invariants"].size() >= 12);
}

TEST_CASE("check rejects a weight growth rate below the theorem threshold") {
  const auto r = run_cli("check --suite vage --lambda 0.2 --samples 50");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("ln(2)") != std::string::npos);
}

TEST_CASE("config file controls the generator budget") {
  const auto cfg_path = scratch_dir() / "config.json";
  write_file(cfg_path, R"({"weights":{"phi":"linear","lambda":1.0,"G_max":8}})");
  const auto prog_path = scratch_dir() / "cfg_prog.json";
  // generator 9 is outside the configured budget of 8
  json prog = {{"elements",
                {{"z", json{{"terms", json::array({{{"gens", json::array({9})},
                                                    {"re", 1.0},
                                                    {"im", 0.0}}})}}}}},
               {"program", json::array({{{"op", "load"}, {"name", "z"}}})}};
  write_file(prog_path, prog.dump());
  const auto denied = run_cli("--config " + cfg_path.string() + " eval --program " +
                              prog_path.string());
  CHECK(denied.exit_code == 1);
  const auto allowed = run_cli("eval --program " + prog_path.string());
  CHECK(allowed.exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("check --suite bogus").exit_code == 2);
  CHECK(run_cli("covariance --bm --H 0.5 --n-max 32 --U 20 --M 4096").exit_code == 2);
  CHECK(run_cli("covariance --n-max 32").exit_code == 2);
}

TEST_CASE("covariance table") {
  const auto csv_path = scratch_dir() / "cov.csv";
  const auto r = run_cli(
      "covariance --bm --t-grid 0.5:2:0.5 --s-grid 0.5:2:0.5 --n-max 64 --U 20 "
      "--M 4096 --out " +
      csv_path.string());
  CHECK(r.exit_code == 0);
  std::istringstream csv(slurp(csv_path));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "t,s,K_series,K_oracle,K_closed_form,rel_err");
  std::string line;
  int rows = 0;
  double max_err = 0.0;
  bool summary_seen = false;
  while (std::getline(csv, line)) {
    if (line.rfind("# max_rel_err,", 0) == 0) {
      summary_seen = true;
      continue;
    }
    double t, s, series, oracle, closed, rel;
    char comma;
    std::istringstream row(line);
    row >> t >> comma >> s >> comma >> series >> comma >> oracle >> comma >> closed >>
        comma >> rel;
    CHECK(std::abs(series - std::min(t, s)) < 0.1);
    max_err = std::max(max_err, std::abs(series - std::min(t, s)));
    ++rows;
  }
  CHECK(rows == 16);
  CHECK(summary_seen);

  // H = 0.5 emits the same series values as --bm
  const auto h_path = scratch_dir() / "cov_h05.csv";
  CHECK(run_cli("covariance --H 0.5 --t-grid 0.5:2:0.5 --s-grid 0.5:2:0.5 "
                "--n-max 64 --U 20 --M 4096 --out " +
                h_path.string())
            .exit_code == 0);
  std::istringstream a(slurp(csv_path)), b(slurp(h_path));
  std::string la, lb;
  std::getline(a, la);
  std::getline(b, lb);
  while (std::getline(a, la) && std::getline(b, lb)) {
    if (la.rfind("#", 0) == 0) continue;
    std::istringstream ra(la), rb(lb);
    double va[6], vb[6];
    char c;
    ra >> va[0] >> c >> va[1] >> c >> va[2] >> c >> va[3] >> c >> va[4] >> c >> va[5];
    rb >> vb[0] >> c >> vb[1] >> c >> vb[2] >> c >> vb[3] >> c >> vb[4] >> c >> vb[5];
    CHECK(std::abs(va[2] - vb[2]) < 1e-6);  // K_series column
  }
}

TEST_CASE("covariance rejects an under-resolved grid") {
  const auto r = run_cli("covariance --bm --t-grid 0.5:1:0.5 --s-grid 0.5:1:0.5 "
                         "--n-max 400 --U 12 --M 2048 --out " +
                         (scratch_dir() / "bad.csv").string());
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("QuadratureUnderResolved") != std::string::npos);
}

TEST_CASE("integrate subcommand") {
  const auto g_path = scratch_dir() / "g.json";
  const auto y_path = scratch_dir() / "y.json";
  const auto out_path = scratch_dir() / "integral.json";
  write_file(g_path, element_to_string(sc(1.0)));
  write_file(y_path, "{\"constant\": " + element_to_string(sc(1.0)) + "}");

  const auto r = run_cli("integrate --bm --g " + g_path.string() + " --Y " +
                         y_path.string() +
                         " --a 0.25 --b 1.25 --steps 64 --n-max 32 --U 20 --M 4096"
                         " --out " +
                         out_path.string());
  CHECK(r.exit_code == 0);
  const json out = json::parse(slurp(out_path));
  REQUIRE(out.contains("element"));
  REQUIRE(out["convergence"].size() == 3);
  const double d1 = out["convergence"][1]["increment_2norm"].get<double>();
  const double d2 = out["convergence"][2]["increment_2norm"].get<double>();
  CHECK(d2 * 2.0 <= d1);

  // a == b integrates to the zero element
  const auto rz = run_cli("integrate --bm --g " + g_path.string() + " --Y " +
                          y_path.string() +
                          " --a 1 --b 1 --steps 8 --n-max 32 --U 20 --M 4096 --out " +
                          (scratch_dir() / "zero.json").string());
  CHECK(rz.exit_code == 0);
  CHECK(element_from_json(
            json::parse(slurp(scratch_dir() / "zero.json"))["element"])
            .is_zero());

  // parse failures report and exit 1
  write_file(y_path, "{\"pieces\": []}");
  CHECK(run_cli("integrate --bm --g " + g_path.string() + " --Y " + y_path.string() +
                " --a 0 --b 1 --steps 8 --n-max 32 --U 20 --M 4096 --out " +
                (scratch_dir() / "x.json").string())
            .exit_code == 1);
}

TEST_CASE("eval subcommand") {
  const auto prog_path = scratch_dir() / "prog.json";
  const auto out_path = scratch_dir() / "eval_out.json";

  SUBCASE("inversion program") {
    const auto z = sc(2.0) + multiply(gen(1), gen(2));
    json prog = {{"elements", {{"z", element_to_json(z)}}},
                 {"program", json::array({{{"op", "load"}, {"name", "z"}},
                                          {{"op", "invert"}}})}};
    write_file(prog_path, prog.dump());
    const auto r =
        run_cli("eval --program " + prog_path.string() + " --out " + out_path.string());
    CHECK(r.exit_code == 0);
    const auto result = element_from_json(json::parse(slurp(out_path)));
    CHECK(grafock::testing::max_coeff_delta(
              result, sc(0.5) - 0.25 * multiply(gen(1), gen(2))) < 1e-15);
  }

  SUBCASE("odd element squares to zero") {
    const auto v = 2.0 * gen(1) + 3.0 * gen(3) - gen(5);
    json prog = {{"elements", {{"v", element_to_json(v)}}},
                 {"program", json::array({{{"op", "load"}, {"name", "v"}},
                                          {{"op", "load"}, {"name", "v"}},
                                          {{"op", "multiply"}}})}};
    write_file(prog_path, prog.dump());
    const auto r =
        run_cli("eval --program " + prog_path.string() + " --out " + out_path.string());
    CHECK(r.exit_code == 0);
    CHECK(element_from_json(json::parse(slurp(out_path))).is_zero());
  }

  SUBCASE("double dagger-7 is the identity") {
    const auto z = sc(Complex(1.0, 2.0)) + Complex(0.0, 1.0) * gen(2) +
                   0.75 * multiply(gen(1), gen(3));
    json prog = {{"elements", {{"z", element_to_json(z)}}},
                 {"program", json::array({{{"op", "load"}, {"name", "z"}},
                                          {{"op", "conjugate"}, {"k", 7}},
                                          {{"op", "conjugate"}, {"k", 7}}})}};
    write_file(prog_path, prog.dump());
    const auto r =
        run_cli("eval --program " + prog_path.string() + " --out " + out_path.string());
    CHECK(r.exit_code == 0);
    CHECK(element_from_json(json::parse(slurp(out_path))) == z);
  }

  SUBCASE("precondition violations exit 1 with the module error name") {
    json prog = {{"elements", {{"v", element_to_json(gen(1))}}},
                 {"program", json::array({{{"op", "load"}, {"name", "v"}},
                                          {{"op", "invert"}}})}};
    write_file(prog_path, prog.dump());
    const auto r = run_cli("eval --program " + prog_path.string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("NotInvertible") != std::string::npos);
  }

  SUBCASE("norms land as scalar elements") {
    json prog = {{"elements",
                  {{"z", element_to_json(sc(3.0) + 4.0 * gen(1))}}},
                 {"program", json::array({{{"op", "load"}, {"name", "z"}},
                                          {{"op", "norm"}, {"p", 2}}})}};
    write_file(prog_path, prog.dump());
    const auto r =
        run_cli("eval --program " + prog_path.string() + " --out " + out_path.string());
    CHECK(r.exit_code == 0);
    const auto result = element_from_json(json::parse(slurp(out_path)));
    CHECK(result.body().real() == doctest::Approx(5.0).epsilon(1e-14));
  }
}
