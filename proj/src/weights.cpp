#include "grafock/weights.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "grafock/errors.hpp"

namespace grafock {

WeightSystem::WeightSystem(std::vector<double> phi, double xi, int g_max)
    : phi_(std::move(phi)), xi_(xi), g_max_(g_max) {
  if (g_max_ < 1 || g_max_ > MultiIndex::max_generators)
    throw Error("InvalidGeneratorBudget", "G_max must be in [1, 64]");
  if (phi_[0] != 0.0) throw Error("InvalidWeight", "phi(0) must be 0");
  for (int n = 1; n <= g_max_; ++n) {
    if (phi_[n] < phi_[n - 1])
      throw Error("InvalidWeight", "phi must be monotone increasing");
    if (phi_[n] < xi_ * n - 1e-12)
      throw Error("InvalidWeight", "phi(n) must dominate xi * n");
  }
}

WeightSystem WeightSystem::linear(double lambda, int g_max) {
  return from_phi([lambda](int n) { return lambda * n; }, lambda, g_max);
}

WeightSystem WeightSystem::from_phi(std::function<double(int)> phi,
                                    double xi_lower_bound, int g_max) {
  std::vector<double> values(static_cast<std::size_t>(g_max) + 1);
  for (int n = 0; n <= g_max; ++n) values[n] = phi(n);
  return WeightSystem(std::move(values), xi_lower_bound, g_max);
}

double WeightSystem::log_weight(MultiIndex alpha) const {
  if (alpha.max_generator() > g_max_)
    throw Error("InvalidGenerator", "index exceeds the weight system's G_max");
  double s = 0.0;
  for (std::uint64_t w = alpha.bits(); w; w &= w - 1)
    s += phi_[std::countr_zero(w) + 1];
  return s;
}

double weighted_norm(const GrassmannElement& f, int p, const WeightSystem& w) {
  double sum = 0.0;
  for (const auto& t : f.terms()) {
    const double lc = w.log_weight(MultiIndex::from_bits(t.bits));
    sum += std::norm(t.coeff) * std::exp(-2.0 * p * lc);
  }
  return std::sqrt(sum);
}

std::vector<double> norm_limit_check(const GrassmannElement& f, const WeightSystem& w,
                                     std::span<const int> p_sequence) {
  if (w.phi(1) <= 0.0)
    throw Error("InvalidWeight", "norm_limit_check requires c_a > 1 off the body");
  std::vector<double> out;
  out.reserve(p_sequence.size());
  for (int p : p_sequence) out.push_back(weighted_norm(f, p, w));
  return out;
}

double vage_constant(int d, const WeightSystem& w, VageMode mode) {
  if (d < 1) throw InvalidOrder("vage_constant requires d >= 1");
  const double threshold = std::numbers::ln2 / (2.0 * d);
  if (w.xi() <= threshold)
    throw BoundDiverges("growth rate xi = " + std::to_string(w.xi()) +
                        " must exceed ln(2)/(2d) = " + std::to_string(threshold));
  if (mode == VageMode::tail_bounded)
    return std::sqrt(1.0 + 1.0 / (std::exp(2.0 * d * w.xi()) - 2.0));
  // sum over all subsets of {1..G_max} factorizes per generator
  double prod = 1.0;
  for (int n = 1; n <= w.g_max(); ++n) prod *= 1.0 + std::exp(-2.0 * d * w.phi(n));
  return std::sqrt(prod);
}

VageReport check_vage(const GrassmannElement& f, const GrassmannElement& g, int p,
                      int q, const WeightSystem& w) {
  if (p <= q) throw InvalidOrder("check_vage requires p > q");
  VageReport r;
  r.constant = vage_constant(p - q, w, VageMode::truncated);
  r.lhs = weighted_norm(multiply(f, g), p, w);
  r.rhs = r.constant * weighted_norm(f, q, w) * weighted_norm(g, p, w);
  r.holds = r.lhs <= r.rhs + 1e-9 * r.rhs;
  return r;
}

PowerSeries PowerSeries::geometric() {
  return {[](std::size_t) { return Complex(1.0); }, 1.0};
}

PowerSeries PowerSeries::exponential() {
  return {[](std::size_t n) {
            double inv = 1.0;
            for (std::size_t k = 2; k <= n; ++k) inv /= static_cast<double>(k);
            return Complex(inv);
          },
          std::numeric_limits<double>::infinity()};
}

PowerSeries PowerSeries::from_coefficients(std::vector<Complex> c, double radius) {
  auto shared = std::make_shared<std::vector<Complex>>(std::move(c));
  return {[shared](std::size_t n) {
            return n < shared->size() ? (*shared)[n] : Complex(0.0);
          },
          radius};
}

GrassmannElement power_series_eval(const PowerSeries& series, const GrassmannElement& f,
                                   int p, const WeightSystem& w) {
  const double c2 = vage_constant(2, w, VageMode::truncated);
  if (!(std::abs(f.body()) < series.radius / c2))
    throw ConvergencePreconditionFailed(
        "|body(f)| must be below radius / C_2 = " + std::to_string(series.radius / c2));
  GrassmannElement acc = GrassmannElement::scalar(series.coeff(0));
  GrassmannElement power = GrassmannElement::scalar(1.0);
  for (std::size_t n = 1; n <= series.max_terms; ++n) {
    power = multiply(power, f);
    const GrassmannElement increment =
        linear_combine(series.coeff(n), power, 0.0, GrassmannElement::zero());
    acc = acc + increment;
    // Both the working H_{-p-2} norm and the plain 2-norm must settle; the
    // weighted norm alone can vanish on high generators while soul
    // corrections still carry 2-norm mass.
    if (weighted_norm(increment, p + 2, w) < 1e-12 && p_norm(increment, 2) < 1e-12)
      return acc;
  }
  throw CapExceeded("power series did not settle within " +
                    std::to_string(series.max_terms) + " terms");
}

GrassmannElement invert_distribution(const GrassmannElement& f, int p,
                                     const WeightSystem& w) {
  const Complex b = f.body();
  if (std::abs(b) <= algebra_config().invert_epsilon)
    throw NotInvertible("body vanishes; not invertible in the distribution space");
  const GrassmannElement minus_u = (-1.0 / b) * f.soul();
  const GrassmannElement series = power_series_eval(PowerSeries::geometric(), minus_u, p, w);
  return (1.0 / b) * series;
}

}  // namespace grafock
