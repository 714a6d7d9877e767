#pragma once

#include <functional>
#include <span>
#include <vector>

#include "grafock/element.hpp"

namespace grafock {

// Weight family c_a = exp(sum_{k in a} phi(k)) with phi monotone increasing,
// phi(0) = 0. Multiplicative by construction: c_a c_b = c_{a v b} for
// disjoint a, b. xi() is a lower bound on the growth rate, phi(n) >= xi * n,
// used by the closed-form tail bound. Immutable after construction.
class WeightSystem {
 public:
  static WeightSystem linear(double lambda = 1.0, int g_max = 64);
  static WeightSystem from_phi(std::function<double(int)> phi, double xi_lower_bound,
                               int g_max = 64);

  double phi(int n) const { return phi_.at(static_cast<std::size_t>(n)); }
  double xi() const { return xi_; }
  int g_max() const { return g_max_; }

  // log c_alpha = sum of phi over the generators of alpha.
  double log_weight(MultiIndex alpha) const;

 private:
  WeightSystem(std::vector<double> phi, double xi, int g_max);
  std::vector<double> phi_;  // phi_[n] for n = 0..g_max
  double xi_;
  int g_max_;
};

// ||f||_{H_{-p}} = (sum_a |f_a|^2 c_a^(-2p))^(1/2). Negative p gives the
// test-space norms H_{+|p|}. At p = 0 this is the 2-norm.
double weighted_norm(const GrassmannElement& f, int p, const WeightSystem& w);

// ||f||_{H_{-p}} along p_sequence; decreases monotonically to |body(f)| when
// c_a > 1 off the body index.
std::vector<double> norm_limit_check(const GrassmannElement& f, const WeightSystem& w,
                                     std::span<const int> p_sequence);

enum class VageMode { truncated, tail_bounded };

// The constant C_d in the Vage inequality. truncated evaluates
// sqrt(sum_{a subset of 1..G_max} c_a^(-2d)) through the product identity
// prod_n (1 + e^(-2 d phi(n))); tail_bounded evaluates the closed geometric
// bound sqrt(1 + 1/(e^(2 d xi) - 2)). Throws BoundDiverges when
// xi <= ln(2)/(2d).
double vage_constant(int d, const WeightSystem& w, VageMode mode);

struct VageReport {
  double lhs = 0.0;       // ||f g||_{H_{-p}}
  double rhs = 0.0;       // C_{p-q} ||f||_{H_{-q}} ||g||_{H_{-p}}
  double constant = 0.0;  // C_{p-q}, truncated mode
  bool holds = false;
};

// Evaluates both sides of ||fg||_{-p} <= C_{p-q} ||f||_{-q} ||g||_{-p};
// `holds` allows 1e-9 relative slack. Throws InvalidOrder when p <= q.
VageReport check_vage(const GrassmannElement& f, const GrassmannElement& g, int p,
                      int q, const WeightSystem& w);

// A power series sum_n coeff(n) x^n with radius of convergence `radius`.
struct PowerSeries {
  std::function<Complex(std::size_t)> coeff;
  double radius = 0.0;
  std::size_t max_terms = 64;

  static PowerSeries geometric();    // sum x^n, radius 1
  static PowerSeries exponential();  // sum x^n / n!, infinite radius
  static PowerSeries from_coefficients(std::vector<Complex> c, double radius);
};

// F(f) summed until the H_{-p-2} norm of the increment falls below 1e-12 or
// max_terms is hit (CapExceeded). Requires |body(f)| < radius / C_2 with
// C_2 = vage_constant(2, w, truncated), else ConvergencePreconditionFailed.
// Soul corrections terminate exactly by nilpotency.
GrassmannElement power_series_eval(const PowerSeries& series, const GrassmannElement& f,
                                   int p, const WeightSystem& w);

// Neumann-series inverse computed in the distribution space: scales out the
// body and evaluates the geometric series at minus the normalized soul.
GrassmannElement invert_distribution(const GrassmannElement& f, int p,
                                     const WeightSystem& w);

}  // namespace grafock
