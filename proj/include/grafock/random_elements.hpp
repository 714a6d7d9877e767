#pragma once

#include <random>

#include "grafock/element.hpp"

namespace grafock {

struct RandomElementSpec {
  int generator_count = 10;  // draw indices within 1..generator_count
  int max_terms = 16;
  bool soul_only = false;
  bool odd_only = false;
  bool real_coeffs = false;
};

// Uniformly drawn sparse element with coefficients in the unit box.
// Deterministic for a given engine state.
inline GrassmannElement random_element(std::mt19937_64& rng,
                                       const RandomElementSpec& spec) {
  std::uniform_int_distribution<int> term_count(1, spec.max_terms);
  std::uniform_int_distribution<std::uint64_t> bits_dist(
      0, (spec.generator_count >= 64) ? ~std::uint64_t{0}
                                      : ((std::uint64_t{1} << spec.generator_count) - 1));
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<GrassmannElement::Term> terms;
  const int n = term_count(rng);
  for (int i = 0; i < n; ++i) {
    std::uint64_t bits = bits_dist(rng);
    if (spec.soul_only && bits == 0) bits = 1;
    if (spec.odd_only) {
      if (bits == 0) bits = 1;
      if (std::popcount(bits) % 2 == 0) bits &= bits - 1;  // drop one generator
      if (bits == 0) bits = 1;
    }
    const double re = coeff(rng);
    const double im = spec.real_coeffs ? 0.0 : coeff(rng);
    terms.push_back({bits, Complex(re, im)});
  }
  return GrassmannElement::from_contributions(std::move(terms));
}

}  // namespace grafock
