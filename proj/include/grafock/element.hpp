#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "grafock/multi_index.hpp"

namespace grafock {

using Complex = std::complex<double>;

// A supernumber: finitely supported map MultiIndex -> complex coefficient.
// Terms are kept sorted by bit pattern with no stored zeros, so equal values
// have equal representations. Elements are immutable values; every operation
// returns a fresh element and is safe to run concurrently.
class GrassmannElement {
 public:
  struct Term {
    std::uint64_t bits;
    Complex coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  GrassmannElement() = default;

  static GrassmannElement zero() { return {}; }

  static GrassmannElement scalar(Complex c) {
    GrassmannElement z;
    if (c != 0.0) z.terms_.push_back({0, c});
    return z;
  }

  static GrassmannElement generator(int id) { return basis(MultiIndex::of({id})); }

  static GrassmannElement basis(MultiIndex idx, Complex c = 1.0) {
    GrassmannElement z;
    if (c != 0.0) z.terms_.push_back({idx.bits(), c});
    return z;
  }

  // Accepts contributions in any order, possibly with repeated indices;
  // sums repeats and prunes. This is the single normalization funnel.
  static GrassmannElement from_contributions(std::vector<Term> contributions);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Complex coefficient(MultiIndex idx) const;
  Complex body() const;
  GrassmannElement soul() const;

  // Largest generator id appearing in any term, 0 for pure-body elements.
  int max_generator() const;

  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

 private:
  std::vector<Term> terms_;
};

// --- ring operations ------------------------------------------------------

// Bilinear extension of index_product. Contributions landing on the same
// index are summed smallest magnitude first, so that the +x/-x pairs produced
// by anticommutation cancel exactly (odd squares and soul powers vanish to
// the literal zero element, not to round-off dust).
GrassmannElement multiply(const GrassmannElement& z, const GrassmannElement& w);

// a*z + b*w with term-wise addition and pruning of exact zeros.
GrassmannElement linear_combine(Complex a, const GrassmannElement& z, Complex b,
                                const GrassmannElement& w);

// (sum_a |z_a|^p)^(1/p), integer p >= 1.
double p_norm(const GrassmannElement& z, int p);

// <z,w> = sum_a z_a * conj(w_a); conjugate-linear in the second argument.
Complex inner_product(const GrassmannElement& z, const GrassmannElement& w);

// Neumann-series inverse z^-1 = z_B^-1 sum_k (-z_B^-1 z_S)^k; the series
// terminates exactly by soul nilpotency. Throws NotInvertible when |body|
// is at or below the configured epsilon.
GrassmannElement invert(const GrassmannElement& z);

// (even part including body, odd part); even + odd == z.
std::pair<GrassmannElement, GrassmannElement> grade_split(const GrassmannElement& z);

// --- operator sugar --------------------------------------------------------

inline GrassmannElement operator*(const GrassmannElement& z, const GrassmannElement& w) {
  return multiply(z, w);
}
inline GrassmannElement operator+(const GrassmannElement& z, const GrassmannElement& w) {
  return linear_combine(1.0, z, 1.0, w);
}
inline GrassmannElement operator-(const GrassmannElement& z, const GrassmannElement& w) {
  return linear_combine(1.0, z, -1.0, w);
}
inline GrassmannElement operator*(Complex a, const GrassmannElement& z) {
  return linear_combine(a, z, 0.0, GrassmannElement::zero());
}
inline GrassmannElement operator*(const GrassmannElement& z, Complex a) { return a * z; }
inline GrassmannElement operator-(const GrassmannElement& z) { return Complex(-1.0) * z; }

}  // namespace grafock
