#pragma once

#include <cmath>

#include "grafock/element.hpp"

namespace grafock::testing {

inline double max_coeff_delta(const GrassmannElement& a, const GrassmannElement& b) {
  const GrassmannElement diff = a - b;
  double worst = 0.0;
  for (const auto& t : diff.terms()) worst = std::max(worst, std::abs(t.coeff));
  return worst;
}

inline GrassmannElement gen(int id) { return GrassmannElement::generator(id); }
inline GrassmannElement sc(Complex c) { return GrassmannElement::scalar(c); }

}  // namespace grafock::testing
