#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "grafock/element.hpp"
#include "grafock/quadrature.hpp"

namespace grafock {

struct GrowthParams {
  double K = 1.0;  // m(u) <= K |u|^-b for |u| <= 1, K |u|^(2N) for |u| > 1
  double b = 0.0;  // b < 2
  int N = 0;
};

// The spectral density m(u) of the kernel integral. PowerLaw |u|^(1-2H) with
// H in (0,1) reproduces fractional-Brownian-motion covariances; Constant is
// the H = 1/2 (Brownian) case.
class SpectralDensity {
 public:
  enum class Form { constant, power_law, tabulated };

  static SpectralDensity constant();
  static SpectralDensity power_law(double hurst);
  // Symmetric density given as samples of m(|u|) on an increasing grid;
  // linearly interpolated, zero beyond the last abscissa.
  static SpectralDensity tabulated(std::vector<double> u, std::vector<double> m,
                                   GrowthParams growth);

  double operator()(double u) const;
  double sqrt_at(double u) const;

  Form form() const { return form_; }
  double hurst() const { return hurst_; }
  const GrowthParams& growth() const { return growth_; }

 private:
  Form form_ = Form::constant;
  double hurst_ = 0.5;
  GrowthParams growth_;
  std::vector<double> tab_u_, tab_m_;
};

struct QuadratureSpec {
  double half_width = 40.0;  // U: frequency cutoff
  int node_budget = 16384;   // M: approximate total node count
};

// Envelope constants for |S_m xi_n| and its Lipschitz quotients on the cached
// time grid: |S_m xi_n(t)| <= D1 n^((N+1)/2) + D2 and
// |S_m xi_n(t) - S_m xi_n(s)| <= |t - s| (D3 n^((N+2)/2) + D4).
// The violations record max(sample - envelope); fitted envelopes keep them <= 0.
struct DerivativeBoundParams {
  double D1 = 0.0, D2 = 0.0, D3 = 0.0, D4 = 0.0;
  int N = 0;
  double sup_violation = 0.0;
  double lip_violation = 0.0;
};

// The process X_m(t) = T_{f_m(t)} with coefficient functions
// f_n(t) = int_0^t (S_m xi_n)(u) du, truncated at n_max Hermite orders.
// Hermite order n is attached to generator id n + 1. The frequency grid is
// built once at construction; queries are read-only and safe to run
// concurrently.
class ProcessModel {
 public:
  ProcessModel(SpectralDensity density, int n_max, QuadratureSpec quad = {},
               double t_max = 4.0);

  const SpectralDensity& density() const { return density_; }
  int n_max() const { return n_max_; }
  double t_max() const { return t_max_; }
  const QuadratureSpec& quadrature() const { return quad_; }

  // (S_m xi_n)(x) for one order; identical to sm_coeffs(x)[n].
  double apply_sm(int n, double x) const;

  // f_n(t), n = 0..n_max-1. Throws GridExceeded for |t| > t_max.
  std::vector<double> f_coeffs(double t) const;
  // d/dt f_n(t) = (S_m xi_n)(t).
  std::vector<double> sm_coeffs(double t) const;

  // Batched variants: result[k] is the coefficient vector at ts[k]; the
  // Hermite recurrence is streamed once across all requested points.
  std::vector<std::vector<double>> f_coeff_table(std::span<const double> ts) const;
  std::vector<std::vector<double>> sm_coeff_table(std::span<const double> ts) const;

  // sum_n f_n(t) f_n(s): the truncated covariance kernel.
  double covariance_series(double t, double s) const;

  // X_m(t) g = T_{f_m(t)} g; generators above n_max (or the index width)
  // are rejected with TruncationOverflow.
  GrassmannElement x_apply(double t, const GrassmannElement& g) const;
  // W_m(t) g = T_{df_m/dt} g, the derivative process.
  GrassmannElement w_apply(double t, const GrassmannElement& g) const;

  // Midpoint Riemann approximation of int_a^b Y(t) W_m(t) g dt.
  GrassmannElement pettis_integral(const std::function<GrassmannElement(double)>& Y,
                                   const GrassmannElement& g, double a, double b,
                                   int steps) const;

  DerivativeBoundParams fit_bound_params() const;

 private:
  enum class KernelFamily { multiplier, antiderivative };

  // One pass of the Hermite recurrence over the frequency grid, folded
  // against the requested kernels: result[k][n] is the n-th coefficient at
  // ts[k]. `pref` carries quadrature weight times sqrt(m).
  std::vector<std::vector<double>> stream_table(const std::vector<double>& pref,
                                                std::span<const double> ts,
                                                KernelFamily family) const;
  GrassmannElement element_from_coeffs(std::span<const double> coeffs) const;
  void require_in_grid(double t) const;
  const std::vector<std::vector<double>>& cached_sm_samples() const;

  SpectralDensity density_;
  int n_max_;
  QuadratureSpec quad_;
  double t_max_;
  quad::Grid grid_;                 // frequency nodes on (0, U]
  std::vector<double> weighted_sqrt_m_;  // quadrature weight * sqrt(m(u))

  struct SmCache {
    std::once_flag once;
    std::vector<std::vector<double>> samples;  // [n][time grid]
  };
  std::unique_ptr<SmCache> cache_ = std::make_unique<SmCache>();
  std::vector<double> cache_times_;
};

// Adaptive quadrature of (1/2pi) int (e^{iut}-1)(e^{-ius}-1) u^-2 m(u) du,
// with analytic head and asymptotic tail. The imaginary part vanishes by the
// integrand's Hermitian symmetry and is checked below 1e-10.
double covariance_oracle(const SpectralDensity& density, double t, double s);

// gamma_H (|t|^2H + |s|^2H - |t-s|^2H) with
// gamma_H = cos(pi H) Gamma(2-2H) / ((1-2H) H) and gamma_{1/2} = pi.
double fbm_closed_form(double t, double s, double hurst);

}  // namespace grafock
