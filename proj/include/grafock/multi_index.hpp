#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "grafock/config.hpp"
#include "grafock/errors.hpp"

namespace grafock {

// A strictly increasing tuple of generator ids encoded as a bit set:
// bit k-1 set <=> generator id k is present. The empty set is the body index.
class MultiIndex {
 public:
  static constexpr int max_generators = 64;

  constexpr MultiIndex() = default;

  static constexpr MultiIndex from_bits(std::uint64_t bits) { return MultiIndex(bits); }

  static MultiIndex of(std::span<const int> gens) {
    std::uint64_t bits = 0;
    for (int g : gens) {
      if (g < 1 || g > algebra_config().g_max)
        throw Error("InvalidGenerator",
                    "generator id " + std::to_string(g) + " outside [1, G_max]");
      bits |= std::uint64_t{1} << (g - 1);
    }
    return MultiIndex(bits);
  }

  static MultiIndex of(std::initializer_list<int> gens) {
    return of(std::span<const int>(gens.begin(), gens.size()));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int degree() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int id) const {
    return (bits_ >> (id - 1)) & std::uint64_t{1};
  }
  constexpr bool subset_of(MultiIndex other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint(MultiIndex other) const { return (bits_ & other.bits_) == 0; }

  // Largest generator id present, 0 when empty.
  constexpr int max_generator() const {
    return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
  }

  std::vector<int> generators() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for (std::uint64_t w = bits_; w; w &= w - 1)
      out.push_back(std::countr_zero(w) + 1);
    return out;
  }

  friend constexpr bool operator==(MultiIndex, MultiIndex) = default;
  friend constexpr auto operator<=>(MultiIndex a, MultiIndex b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  constexpr explicit MultiIndex(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// Parity of sigma(alpha, beta): the number of transpositions needed to sort
// the concatenation (alpha, beta), i.e. #{(a,b) : a in alpha, b in beta, a > b}
// mod 2. Word-parallel: for each b in beta, count members of alpha above it.
constexpr int sigma_parity(std::uint64_t alpha, std::uint64_t beta) {
  int inversions = 0;
  for (std::uint64_t w = beta; w; w &= w - 1) {
    int pos = std::countr_zero(w);
    if (pos < 63) inversions += std::popcount(alpha >> (pos + 1));
  }
  return inversions & 1;
}

inline int sigma_parity(MultiIndex alpha, MultiIndex beta) {
  return sigma_parity(alpha.bits(), beta.bits());
}

// i_alpha * i_beta, either annihilated (shared generator) or a signed index.
struct SignedIndex {
  bool is_zero = true;
  int sign = +1;
  MultiIndex index;

  static constexpr SignedIndex zero() { return SignedIndex{}; }
  static constexpr SignedIndex make(int sign, MultiIndex idx) {
    return SignedIndex{false, sign, idx};
  }
  friend constexpr bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

constexpr SignedIndex index_product(MultiIndex alpha, MultiIndex beta) {
  if (!alpha.disjoint(beta)) return SignedIndex::zero();
  int sign = sigma_parity(alpha.bits(), beta.bits()) ? -1 : +1;
  return SignedIndex::make(sign, MultiIndex::from_bits(alpha.bits() | beta.bits()));
}

}  // namespace grafock
