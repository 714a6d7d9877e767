#include "doctest.h"

#include <cstdlib>
#include <random>

#include "grafock/errors.hpp"
#include "grafock/random_elements.hpp"
#include "grafock/serialization.hpp"
#include "test_util.hpp"

using namespace grafock;
using grafock::testing::gen;
using grafock::testing::sc;

TEST_CASE("element wire format") {
  const auto z = 0.5 * multiply(gen(1), gen(3)) + Complex(0.0, -1.0) * gen(2);
  const auto j = element_to_json(z);
  REQUIRE(j.contains("terms"));
  REQUIRE(j["terms"].size() == 2);
  // canonical order: ascending bit pattern, so {2} before {1,3}
  CHECK(j["terms"][0]["gens"] == nlohmann::json::array({2}));
  CHECK(j["terms"][0]["re"] == 0.0);
  CHECK(j["terms"][0]["im"] == -1.0);
  CHECK(j["terms"][1]["gens"] == nlohmann::json::array({1, 3}));
  CHECK(j["terms"][1]["re"] == 0.5);

  CHECK(element_from_json(j) == z);
}

TEST_CASE("round trips are bit-exact") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    const auto z = random_element(rng, {.generator_count = 32, .max_terms = 24});
    CHECK(element_from_string(element_to_string(z)) == z);
  }
  // values that stress the shortest-round-trip printer
  const auto gnarly = sc(Complex(0.1, -1e-300)) +
                      (1.0 / 3.0) * gen(7) +
                      Complex(1e308, 5e-324) * multiply(gen(1), gen(64));
  CHECK(element_from_string(element_to_string(gnarly)) == gnarly);
}

TEST_CASE("malformed elements are rejected") {
  CHECK_THROWS_AS(element_from_string("{\"terms\": 3}"), ParseError);
  CHECK_THROWS_AS(element_from_string("not json"), ParseError);
  CHECK_THROWS_AS(
      element_from_string(R"({"terms":[{"gens":[3,1],"re":1.0,"im":0.0}]})"),
      ParseError);
  CHECK_THROWS_AS(
      element_from_string(R"({"terms":[{"gens":[1,1],"re":1.0,"im":0.0}]})"),
      ParseError);
  CHECK_THROWS_AS(
      element_from_string(
          R"({"terms":[{"gens":[1],"re":1.0,"im":0.0},{"gens":[1],"re":2.0,"im":0.0}]})"),
      ParseError);
  CHECK_THROWS_AS(
      element_from_string(R"({"terms":[{"gens":[99],"re":1.0,"im":0.0}]})"), Error);
}

TEST_CASE("weight and model configs") {
  const auto w = weight_system_from_json(
      nlohmann::json{{"phi", "linear"}, {"lambda", 0.9}, {"G_max", 32}});
  CHECK(w.g_max() == 32);
  CHECK(w.phi(2) == doctest::Approx(1.8));
  CHECK_THROWS_AS(weight_system_from_json(nlohmann::json{{"phi", "quadratic"}}),
                  ParseError);

  const auto j = nlohmann::json{
      {"density", {{"form", "power_law"}, {"H", 0.7}}},
      {"n_max", 32},
      {"U", 20.0},
      {"M", 4096}};
  const auto model = model_from_json(j);
  CHECK(model.n_max() == 32);
  CHECK(model.density().hurst() == doctest::Approx(0.7));
  const auto round = model_config_to_json(model);
  CHECK(round["density"]["form"] == "power_law");
  CHECK(round["n_max"] == 32);

  CHECK_THROWS_AS(density_from_json(nlohmann::json{{"form", "cauchy"}}), ParseError);
}

TEST_CASE("csv numbers carry 17 significant digits") {
  CHECK(format_csv_double(0.1) == "0.10000000000000001");
  CHECK(format_csv_double(1.0) == "1");
  // 17 significant digits round-trip every finite double
  for (double v : {-2.5e-17, 1.0 / 3.0, 6.02214076e23, 5e-324}) {
    const std::string s = format_csv_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
    CHECK(s.find(',') == std::string::npos);
  }
}
