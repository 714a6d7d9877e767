#include "doctest.h"

#include <random>
#include <sstream>

#include "grafock/errors.hpp"
#include "grafock/fock.hpp"
#include "grafock/random_elements.hpp"
#include "test_util.hpp"

using namespace grafock;
using grafock::testing::gen;
using grafock::testing::max_coeff_delta;
using grafock::testing::sc;

TEST_CASE("left multiplication") {
  CHECK(left_multiply(gen(1), gen(2)) == multiply(gen(1), gen(2)));
  CHECK(left_multiply(gen(1), gen(1)).is_zero());
  CHECK(left_multiply(gen(2), gen(1)) == -multiply(gen(1), gen(2)));

  // matrix element identity <M_{i_a} i_b, i_c> = (-1)^sigma delta_{a v b, c}
  for (std::uint64_t a = 0; a < 8; ++a)
    for (std::uint64_t b = 0; b < 8; ++b)
      for (std::uint64_t c = 0; c < 8; ++c) {
        const auto lhs = inner_product(
            left_multiply(GrassmannElement::basis(MultiIndex::from_bits(a)),
                          GrassmannElement::basis(MultiIndex::from_bits(b))),
            GrassmannElement::basis(MultiIndex::from_bits(c)));
        const auto prod =
            index_product(MultiIndex::from_bits(a), MultiIndex::from_bits(b));
        const Complex expected =
            (!prod.is_zero && prod.index.bits() == c) ? Complex(prod.sign) : 0.0;
        CHECK(lhs == expected);
      }
}

TEST_CASE("left derivative on basis blades") {
  const auto i12 = multiply(gen(1), gen(2));
  CHECK(left_derivative(gen(1), i12) == gen(2));
  CHECK(left_derivative(gen(2), i12) == -gen(1));
  CHECK(left_derivative(gen(3), i12).is_zero());

  // the first-position rule (-1)^(k-1) across a longer blade
  const auto i123 = multiply(i12, gen(3));
  CHECK(left_derivative(gen(1), i123) == multiply(gen(2), gen(3)));
  CHECK(left_derivative(gen(2), i123) == -multiply(gen(1), gen(3)));
  CHECK(left_derivative(gen(3), i123) == multiply(gen(1), gen(2)));
}

TEST_CASE("left derivative is the adjoint of left multiplication") {
  std::mt19937_64 rng(47);
  const RandomElementSpec spec{.generator_count = 8, .max_terms = 12};
  for (int i = 0; i < 500; ++i) {
    const auto f = random_element(rng, spec);
    const auto g = random_element(rng, spec);
    const auto h = random_element(rng, spec);
    const auto lhs = inner_product(left_derivative(f, g), h);
    const auto rhs = inner_product(g, left_multiply(f, h));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("left derivative extends antilinearly in its symbol") {
  std::mt19937_64 rng(53);
  const auto f = random_element(rng, {.generator_count = 6, .max_terms = 8});
  const auto g = random_element(rng, {.generator_count = 6, .max_terms = 8});
  const Complex c(0.3, -1.7);
  CHECK(max_coeff_delta(left_derivative(c * f, g),
                        std::conj(c) * left_derivative(f, g)) < 1e-15);
}

TEST_CASE("Berezin integral") {
  const Complex a(1.5, 0.25), b(-2.0, 1.0);
  CHECK(berezin_integral(MultiIndex::of({1}), sc(a) + b * gen(1)) == sc(b));
  CHECK(berezin_integral(MultiIndex::of({1, 2}), multiply(gen(1), gen(2))) == sc(1.0));
  CHECK(berezin_integral(MultiIndex::of({1}), gen(2)).is_zero());

  // top-coefficient extraction: f over generators {1..4}, alpha their product
  std::mt19937_64 rng(59);
  const auto f = random_element(rng, {.generator_count = 4, .max_terms = 16});
  const auto alpha = MultiIndex::of({1, 2, 3, 4});
  const auto top = berezin_integral(alpha, f);
  CHECK(top == sc(f.coefficient(alpha)));

  // linear in f, and equal to <M_f 1, i_alpha> for full-support alpha
  CHECK(std::abs(berezin_integral(alpha, f).body() -
                 inner_product(left_multiply(f, sc(1.0)),
                               GrassmannElement::basis(alpha))) < 1e-15);
}

TEST_CASE("T operator") {
  std::mt19937_64 rng(61);
  const auto one = sc(1.0);

  SUBCASE("T_f 1 = f for soul-only f") {
    const auto f = random_element(
        rng, {.generator_count = 8, .max_terms = 12, .soul_only = true});
    CHECK(t_apply(f, one) == f);
  }

  SUBCASE("T_{i1} i1 = 1") { CHECK(t_apply(gen(1), gen(1)) == one); }

  SUBCASE("<T_f 1, T_g 1> = <f, g> on soul-only pairs") {
    for (int i = 0; i < 1000; ++i) {
      const auto f = random_element(
          rng, {.generator_count = 8, .max_terms = 12, .soul_only = true});
      const auto g = random_element(
          rng, {.generator_count = 8, .max_terms = 12, .soul_only = true});
      CHECK(std::abs(inner_product(t_apply(f, one), t_apply(g, one)) -
                     inner_product(f, g)) < 1e-12);
    }
  }
}

TEST_CASE("operator matrices") {
  SUBCASE("N = 1 patterns") {
    const auto mul = operator_matrix(OperatorExpr::left_mul(gen(1)), 1);
    CHECK(mul.at(0, 0) == Complex(0.0));
    CHECK(mul.at(0, 1) == Complex(0.0));
    CHECK(mul.at(1, 0) == Complex(1.0));
    CHECK(mul.at(1, 1) == Complex(0.0));

    const auto der = operator_matrix(OperatorExpr::left_deriv(gen(1)), 1);
    CHECK(der == mul.conjugate_transpose());
    CHECK(der.at(0, 1) == Complex(1.0));

    const auto t = operator_matrix(OperatorExpr::t(gen(1)), 1);
    CHECK(t.at(0, 1) == Complex(1.0));
    CHECK(t.at(1, 0) == Complex(1.0));
    CHECK(t.at(0, 0) == Complex(0.0));
  }

  SUBCASE("derivative matrix is the conjugate transpose of the product matrix") {
    std::mt19937_64 rng(67);
    for (int n = 1; n <= 6; ++n) {
      const auto f = random_element(rng, {.generator_count = n, .max_terms = 10});
      const auto mul = operator_matrix(OperatorExpr::left_mul(f), n);
      const auto der = operator_matrix(OperatorExpr::left_deriv(f), n);
      CHECK(der == mul.conjugate_transpose());
    }
  }

  SUBCASE("T matrices are Hermitian") {
    std::mt19937_64 rng(71);
    const auto f = random_element(rng, {.generator_count = 5, .max_terms = 12});
    const auto t = operator_matrix(OperatorExpr::t(f), 5);
    CHECK(t == t.conjugate_transpose());
  }

  SUBCASE("dimension guard and CSV shape") {
    CHECK_THROWS_AS(operator_matrix(OperatorExpr::left_mul(gen(1)), 13),
                    DimensionTooLarge);
    std::ostringstream csv;
    operator_matrix(OperatorExpr::t(gen(1)), 1).to_csv(csv);
    CHECK(csv.str() == "0,0,1,0\n1,0,0,0\n");
  }
}
