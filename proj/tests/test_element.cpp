#include "doctest.h"

#include <random>

#include "grafock/config.hpp"
#include "grafock/element.hpp"
#include "grafock/errors.hpp"
#include "grafock/random_elements.hpp"
#include "test_util.hpp"

using namespace grafock;
using grafock::testing::gen;
using grafock::testing::max_coeff_delta;
using grafock::testing::sc;

TEST_CASE("product identities") {
  const auto one = sc(1.0);
  const auto i1 = gen(1);

  SUBCASE("(1 + i1)(1 - i1) collapses to exactly 1") {
    CHECK(multiply(one + i1, one - i1) == one);
  }

  SUBCASE("odd elements square to the exact zero element") {
    const auto v = 2.0 * gen(1) + 3.0 * gen(3) - gen(5);
    CHECK(multiply(v, v).is_zero());
  }

  SUBCASE("(2 + i1 i2)(1/2 - 1/4 i1 i2) = 1") {
    const auto z = sc(2.0) + multiply(gen(1), gen(2));
    const auto w = sc(0.5) - 0.25 * multiply(gen(1), gen(2));
    CHECK(max_coeff_delta(multiply(z, w), one) == 0.0);
  }
}

TEST_CASE("linear_combine") {
  std::mt19937_64 rng(11);
  const auto z = random_element(rng, {});
  CHECK(linear_combine(1.0, z, -1.0, z).is_zero());
  CHECK(linear_combine(2.0, gen(1), 3.0, gen(2)) == 2.0 * gen(1) + 3.0 * gen(2));
  CHECK(linear_combine(1.0, sc(1.0) + gen(1), 1.0, sc(1.0) - gen(1)) == sc(2.0));
}

TEST_CASE("p-norms") {
  const auto z = sc(3.0) + 4.0 * gen(1);
  CHECK(p_norm(z, 2) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(p_norm(z, 1) == doctest::Approx(7.0).epsilon(1e-15));
  const auto u = gen(1) + gen(2) + gen(3) + gen(4);
  CHECK(p_norm(u, 2) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(p_norm(z, 0), Error);
}

TEST_CASE("inner product") {
  CHECK(inner_product(gen(3), gen(3)) == Complex(1.0));
  CHECK(inner_product(gen(3), gen(4)) == Complex(0.0));
  const Complex c(1.0, 2.0);
  CHECK(inner_product(c * gen(1), gen(1)) == c);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const auto z = random_element(rng, {});
    const double n2 = p_norm(z, 2);
    CHECK(inner_product(z, z).real() == doctest::Approx(n2 * n2).epsilon(1e-13));
    CHECK(inner_product(z, z).imag() == doctest::Approx(0.0));
  }
}

TEST_CASE("inversion") {
  SUBCASE("worked example 2 + i1 i2") {
    const auto z = sc(2.0) + multiply(gen(1), gen(2));
    const auto w = invert(z);
    CHECK(max_coeff_delta(w, sc(0.5) - 0.25 * multiply(gen(1), gen(2))) < 1e-16);
    CHECK(max_coeff_delta(multiply(z, w), sc(1.0)) < 1e-15);
  }
  SUBCASE("scalars invert to reciprocals") {
    const Complex c(3.0, -4.0);
    CHECK(max_coeff_delta(invert(sc(c)), sc(1.0 / c)) < 1e-16);
  }
  SUBCASE("soul-only elements are not invertible") {
    CHECK_THROWS_AS(invert(gen(1) + gen(2)), NotInvertible);
  }
  SUBCASE("random invertible round-trip") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
      const auto z =
          random_element(rng, {.generator_count = 8, .max_terms = 10}) + sc(2.0);
      CHECK(max_coeff_delta(multiply(z, invert(z)), sc(1.0)) < 1e-12);
    }
  }
}

TEST_CASE("grade split") {
  const auto z = sc(1.0) + gen(1) + multiply(gen(1), gen(2));
  const auto [even, odd] = grade_split(z);
  CHECK(even == sc(1.0) + multiply(gen(1), gen(2)));
  CHECK(odd == gen(1));
  CHECK(even + odd == z);

  CHECK(grade_split(sc(4.0)).first == sc(4.0));
  CHECK(grade_split(sc(4.0)).second.is_zero());
  const auto top = multiply(multiply(gen(1), gen(2)), gen(3));
  CHECK(grade_split(top).first.is_zero());
  CHECK(grade_split(top).second == top);
}

TEST_CASE("body and soul") {
  const auto z = sc(Complex(2.0, 1.0)) + gen(4) + multiply(gen(1), gen(2));
  CHECK(z.body() == Complex(2.0, 1.0));
  CHECK(z.soul() + sc(z.body()) == z);
  CHECK(sc(0.0).is_zero());
  CHECK(GrassmannElement().body() == Complex(0.0));
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(19);
  const RandomElementSpec spec{.generator_count = 10, .max_terms = 24};
  for (int i = 0; i < 300; ++i) {
    const auto z = random_element(rng, spec);
    const auto w = random_element(rng, spec);
    const auto r = random_element(rng, spec);
    CHECK(max_coeff_delta(multiply(multiply(z, w), r), multiply(z, multiply(w, r))) <
          1e-12);
  }
}

TEST_CASE("anticommutation of generators is exact") {
  for (int n = 1; n <= 10; ++n)
    for (int m = 1; m <= 10; ++m)
      CHECK(linear_combine(1.0, multiply(gen(n), gen(m)), 1.0,
                           multiply(gen(m), gen(n)))
                .is_zero());
}

TEST_CASE("soul nilpotency at truncation order") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 25; ++round) {
    GrassmannElement prod = sc(1.0);
    for (int k = 0; k < 7; ++k)
      prod = multiply(prod, random_element(rng, {.generator_count = 6,
                                                 .max_terms = 8,
                                                 .soul_only = true}));
    CHECK(prod.is_zero());
  }
}

TEST_CASE("magnitude pruning is off by default and honors the threshold") {
  auto& cfg = algebra_config();
  const double saved = cfg.prune_threshold;
  const auto tiny = sc(1e-14);
  CHECK_FALSE(tiny.is_zero());
  cfg.prune_threshold = 1e-10;
  CHECK((sc(1.0) + 1e-14 * gen(1)).terms().size() == 1);
  cfg.prune_threshold = saved;
  CHECK((sc(1.0) + 1e-14 * gen(1)).terms().size() == 2);
}
