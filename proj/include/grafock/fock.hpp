#pragma once

#include <iosfwd>
#include <vector>

#include "grafock/element.hpp"

namespace grafock {

// M_f g = f g, left multiplication on the Fock space.
GrassmannElement left_multiply(const GrassmannElement& f, const GrassmannElement& g);

// M*_f g, the adjoint of M_f under <.,.>: extends antilinearly in f,
// M*_f = sum_a conj(f_a) M*_{i_a}, with the basis action
// M*_{i_a} i_b = (-1)^sigma(a, b\a) i_{b\a} when a is contained in b, else 0.
GrassmannElement left_derivative(const GrassmannElement& f, const GrassmannElement& g);

// Iterated left derivative M*_{i_{a_t}} ... M*_{i_{a_1}} f. When f is
// supported on exactly the generators of alpha, this extracts the top
// coefficient as a scalar element.
GrassmannElement berezin_integral(MultiIndex alpha, const GrassmannElement& f);

// T_f g = M_f g + M*_f g.
GrassmannElement t_apply(const GrassmannElement& f, const GrassmannElement& g);

// --- dense matrix oracle ----------------------------------------------------

struct OperatorExpr {
  enum class Kind { LeftMul, LeftDeriv, T };
  Kind kind;
  GrassmannElement symbol;

  static OperatorExpr left_mul(GrassmannElement f) {
    return {Kind::LeftMul, std::move(f)};
  }
  static OperatorExpr left_deriv(GrassmannElement f) {
    return {Kind::LeftDeriv, std::move(f)};
  }
  static OperatorExpr t(GrassmannElement f) { return {Kind::T, std::move(f)}; }
};

GrassmannElement apply(const OperatorExpr& op, const GrassmannElement& g);

// Dense 2^N x 2^N matrix of op in the basis {i_alpha} ordered by bit pattern;
// entry (r, c) = <op(i_c), i_r>. Throws DimensionTooLarge for N > 12.
class DenseMatrix {
 public:
  explicit DenseMatrix(int n) : n_(n), a_(std::size_t{1} << (2 * n)) {}
  int generator_count() const { return n_; }
  std::size_t dim() const { return std::size_t{1} << n_; }
  Complex& at(std::size_t r, std::size_t c) { return a_[r * dim() + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return a_[r * dim() + c]; }
  DenseMatrix conjugate_transpose() const;
  // Row-major CSV, one row per line, each entry as re,im pairs.
  void to_csv(std::ostream& os) const;
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  int n_;
  std::vector<Complex> a_;
};

DenseMatrix operator_matrix(const OperatorExpr& op, int generator_count);

}  // namespace grafock
