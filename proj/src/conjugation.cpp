#include "grafock/conjugation.hpp"

namespace grafock {

GrassmannElement conjugate(const GrassmannElement& z, ConjugationId c) {
  const unsigned m = conjugation_mask(c);
  std::vector<GrassmannElement::Term> out;
  out.reserve(z.terms().size());
  for (const auto& t : z.terms()) {
    const int deg = MultiIndex::from_bits(t.bits).degree();
    const int pi = deg * (deg - 1) / 2;
    int parity = 0;
    if (m & 0b001) parity += deg + pi;
    if (m & 0b100) parity += deg;
    Complex coeff = (m & 0b010) ? std::conj(t.coeff) : t.coeff;
    if (parity & 1) coeff = -coeff;
    out.push_back({t.bits, coeff});
  }
  return GrassmannElement::from_contributions(std::move(out));
}

}  // namespace grafock
