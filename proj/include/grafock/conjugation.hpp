#pragma once

#include <array>
#include <string_view>

#include "grafock/element.hpp"

namespace grafock {

// The eight conjugations of a supernumber. D1 flips generators (i_n -> -i_n,
// reversing products), D2 conjugates coefficients, D3 negates the odd part;
// D4..D7 are their compositions. Together with the identity they form the
// elementary abelian group of order 8.
enum class ConjugationId : int { I = 0, D1, D2, D3, D4, D5, D6, D7 };

// Bit 0: D1 involved, bit 1: D2, bit 2: D3.
constexpr unsigned conjugation_mask(ConjugationId c) {
  constexpr std::array<unsigned, 8> masks = {
      0b000,  // I
      0b001,  // D1
      0b010,  // D2
      0b100,  // D3
      0b011,  // D4 = D1 D2
      0b110,  // D5 = D2 D3
      0b101,  // D6 = D3 D1
      0b111,  // D7 = D1 D2 D3
  };
  return masks[static_cast<int>(c)];
}

constexpr ConjugationId conjugation_from_mask(unsigned m) {
  constexpr std::array<ConjugationId, 8> ids = {
      ConjugationId::I,  ConjugationId::D1, ConjugationId::D2, ConjugationId::D4,
      ConjugationId::D3, ConjugationId::D6, ConjugationId::D5, ConjugationId::D7,
  };
  return ids[m & 0b111];
}

// Composition law of the group: XOR of involvement masks.
constexpr ConjugationId compose(ConjugationId a, ConjugationId b) {
  return conjugation_from_mask(conjugation_mask(a) ^ conjugation_mask(b));
}

constexpr std::string_view conjugation_name(ConjugationId c) {
  constexpr std::array<std::string_view, 8> names = {"I",  "D1", "D2", "D3",
                                                     "D4", "D5", "D6", "D7"};
  return names[static_cast<int>(c)];
}

// Coefficient map of the chosen conjugation:
//   D1: z_a -> (-1)^(|a| + pi(a)) z_a      with pi(a) = |a|(|a|-1)/2
//   D2: z_a -> conj(z_a)
//   D3: z_a -> (-1)^|a| z_a
// and compositions thereof.
GrassmannElement conjugate(const GrassmannElement& z, ConjugationId c);

}  // namespace grafock
