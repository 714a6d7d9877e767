#include "grafock/fock.hpp"

#include <cstdio>
#include <ostream>

#include "grafock/errors.hpp"

namespace grafock {

GrassmannElement left_multiply(const GrassmannElement& f, const GrassmannElement& g) {
  return multiply(f, g);
}

namespace {

// Contributions of conj_f_a * M*_{i_a} g for one basis index a.
void accumulate_basis_derivative(std::uint64_t alpha, Complex weight,
                                 const GrassmannElement& g,
                                 std::vector<GrassmannElement::Term>& out) {
  for (const auto& t : g.terms()) {
    if ((alpha & t.bits) != alpha) continue;  // alpha not contained in beta
    const std::uint64_t rest = t.bits & ~alpha;
    const Complex c = weight * t.coeff;
    out.push_back({rest, sigma_parity(alpha, rest) ? -c : c});
  }
}

}  // namespace

GrassmannElement left_derivative(const GrassmannElement& f, const GrassmannElement& g) {
  std::vector<GrassmannElement::Term> contrib;
  contrib.reserve(f.terms().size() * g.terms().size());
  for (const auto& ft : f.terms())
    accumulate_basis_derivative(ft.bits, std::conj(ft.coeff), g, contrib);
  return GrassmannElement::from_contributions(std::move(contrib));
}

GrassmannElement berezin_integral(MultiIndex alpha, const GrassmannElement& f) {
  // M*_{i_alpha} applied linearly in f's coefficients (no conjugation: the
  // integral is a linear functional, not an operator adjoint in f).
  std::vector<GrassmannElement::Term> contrib;
  contrib.reserve(f.terms().size());
  accumulate_basis_derivative(alpha.bits(), 1.0, f, contrib);
  return GrassmannElement::from_contributions(std::move(contrib));
}

GrassmannElement t_apply(const GrassmannElement& f, const GrassmannElement& g) {
  return left_multiply(f, g) + left_derivative(f, g);
}

GrassmannElement apply(const OperatorExpr& op, const GrassmannElement& g) {
  switch (op.kind) {
    case OperatorExpr::Kind::LeftMul:
      return left_multiply(op.symbol, g);
    case OperatorExpr::Kind::LeftDeriv:
      return left_derivative(op.symbol, g);
    case OperatorExpr::Kind::T:
      return t_apply(op.symbol, g);
  }
  return {};
}

DenseMatrix DenseMatrix::conjugate_transpose() const {
  DenseMatrix out(n_);
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) out.at(c, r) = std::conj(at(r, c));
  return out;
}

void DenseMatrix::to_csv(std::ostream& os) const {
  char buf[64];
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = 0; c < dim(); ++c) {
      const Complex& v = at(r, c);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", v.real(), v.imag());
      os << (c ? "," : "") << buf;
    }
    os << '\n';
  }
}

DenseMatrix operator_matrix(const OperatorExpr& op, int generator_count) {
  if (generator_count > 12)
    throw DimensionTooLarge("operator_matrix limited to N <= 12 generators, got " +
                            std::to_string(generator_count));
  if (generator_count < 0)
    throw Error("InvalidGenerator", "negative generator count");
  DenseMatrix m(generator_count);
  const std::size_t dim = m.dim();
  for (std::size_t c = 0; c < dim; ++c) {
    const GrassmannElement image =
        apply(op, GrassmannElement::basis(MultiIndex::from_bits(c)));
    for (const auto& t : image.terms()) m.at(t.bits, c) = t.coeff;
  }
  return m;
}

}  // namespace grafock
