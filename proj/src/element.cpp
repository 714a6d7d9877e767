#include "grafock/element.hpp"

#include <algorithm>
#include <cmath>

#include "grafock/config.hpp"
#include "grafock/errors.hpp"

namespace grafock {

AlgebraConfig& algebra_config() {
  static AlgebraConfig cfg;
  return cfg;
}

GrassmannElement GrassmannElement::from_contributions(std::vector<Term> contributions) {
  // Canonical order: index, then ascending magnitude. Summing a symmetric
  // +x/-x multiset in this order collapses it pairwise to an exact zero.
  std::sort(contributions.begin(), contributions.end(),
            [](const Term& a, const Term& b) {
              if (a.bits != b.bits) return a.bits < b.bits;
              double na = std::norm(a.coeff), nb = std::norm(b.coeff);
              if (na != nb) return na < nb;
              if (a.coeff.real() != b.coeff.real())
                return a.coeff.real() < b.coeff.real();
              return a.coeff.imag() < b.coeff.imag();
            });

  const double prune = algebra_config().prune_threshold;
  GrassmannElement out;
  std::size_t i = 0;
  while (i < contributions.size()) {
    const std::uint64_t bits = contributions[i].bits;
    Complex acc = 0.0;
    for (; i < contributions.size() && contributions[i].bits == bits; ++i)
      acc += contributions[i].coeff;
    if (acc != 0.0 && std::abs(acc) >= prune) out.terms_.push_back({bits, acc});
  }
  return out;
}

Complex GrassmannElement::coefficient(MultiIndex idx) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), idx.bits(),
                             [](const Term& t, std::uint64_t b) { return t.bits < b; });
  if (it != terms_.end() && it->bits == idx.bits()) return it->coeff;
  return 0.0;
}

Complex GrassmannElement::body() const {
  if (!terms_.empty() && terms_.front().bits == 0) return terms_.front().coeff;
  return 0.0;
}

GrassmannElement GrassmannElement::soul() const {
  GrassmannElement out;
  auto begin = terms_.begin();
  if (begin != terms_.end() && begin->bits == 0) ++begin;
  out.terms_.assign(begin, terms_.end());
  return out;
}

int GrassmannElement::max_generator() const {
  int m = 0;
  for (const Term& t : terms_)
    m = std::max(m, MultiIndex::from_bits(t.bits).max_generator());
  return m;
}

GrassmannElement multiply(const GrassmannElement& z, const GrassmannElement& w) {
  std::vector<GrassmannElement::Term> contrib;
  contrib.reserve(z.terms().size() * w.terms().size());
  for (const auto& a : z.terms()) {
    for (const auto& b : w.terms()) {
      if (a.bits & b.bits) continue;  // shared generator: annihilated
      const Complex c = a.coeff * b.coeff;
      contrib.push_back({a.bits | b.bits, sigma_parity(a.bits, b.bits) ? -c : c});
    }
  }
  return GrassmannElement::from_contributions(std::move(contrib));
}

GrassmannElement linear_combine(Complex a, const GrassmannElement& z, Complex b,
                                const GrassmannElement& w) {
  std::vector<GrassmannElement::Term> contrib;
  contrib.reserve(z.terms().size() + w.terms().size());
  if (a != 0.0)
    for (const auto& t : z.terms()) contrib.push_back({t.bits, a * t.coeff});
  if (b != 0.0)
    for (const auto& t : w.terms()) contrib.push_back({t.bits, b * t.coeff});
  return GrassmannElement::from_contributions(std::move(contrib));
}

double p_norm(const GrassmannElement& z, int p) {
  if (p < 1) throw Error("InvalidNormOrder", "p-norm requires integer p >= 1");
  double sum = 0.0;
  for (const auto& t : z.terms()) {
    const double m = std::abs(t.coeff);
    double mp = m;
    for (int k = 1; k < p; ++k) mp *= m;
    sum += mp;
  }
  return p == 1 ? sum : std::pow(sum, 1.0 / p);
}

Complex inner_product(const GrassmannElement& z, const GrassmannElement& w) {
  Complex acc = 0.0;
  auto it = z.terms().begin();
  auto jt = w.terms().begin();
  while (it != z.terms().end() && jt != w.terms().end()) {
    if (it->bits < jt->bits) ++it;
    else if (jt->bits < it->bits) ++jt;
    else {
      acc += it->coeff * std::conj(jt->coeff);
      ++it;
      ++jt;
    }
  }
  return acc;
}

GrassmannElement invert(const GrassmannElement& z) {
  const Complex b = z.body();
  if (std::abs(b) <= algebra_config().invert_epsilon)
    throw NotInvertible("body magnitude " + std::to_string(std::abs(b)) +
                        " at or below epsilon; no inverse exists");
  const GrassmannElement u = (1.0 / b) * z.soul();  // z = b (1 + u)
  GrassmannElement acc = GrassmannElement::scalar(1.0);
  GrassmannElement pw = GrassmannElement::scalar(1.0);
  for (int k = 1; k <= MultiIndex::max_generators; ++k) {
    pw = multiply(pw, u);
    if (pw.is_zero()) break;  // nilpotency order reached
    acc = linear_combine(1.0, acc, (k % 2 != 0) ? -1.0 : 1.0, pw);
  }
  return (1.0 / b) * acc;
}

std::pair<GrassmannElement, GrassmannElement> grade_split(const GrassmannElement& z) {
  std::vector<GrassmannElement::Term> ev, od;
  for (const auto& t : z.terms()) {
    (MultiIndex::from_bits(t.bits).degree() % 2 == 0 ? ev : od).push_back(t);
  }
  return {GrassmannElement::from_contributions(std::move(ev)),
          GrassmannElement::from_contributions(std::move(od))};
}

}  // namespace grafock
