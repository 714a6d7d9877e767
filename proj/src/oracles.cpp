#include "grafock/oracles.hpp"

#include <cmath>

#include "grafock/errors.hpp"

namespace grafock::oracles {

SignedIndex naive_sign_sort(const SeqIndex& s) {
  std::vector<int> v = s.gens;
  long swaps = 0;
  for (std::size_t pass = 0; pass < v.size(); ++pass) {
    bool moved = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        ++swaps;
        moved = true;
      }
    }
    if (!moved) break;
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return SignedIndex::zero();
  return SignedIndex::make(swaps % 2 == 0 ? +1 : -1, MultiIndex::of(v));
}

namespace {

double sample(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) throw NonFinite("oracle integrand produced a non-finite value");
  return v;
}

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

void adapt(const std::function<double(double)>& f, double a, double b, double fa,
           double fm, double fb, double whole, double tol, int depth, QuadResult& out) {
  const double m = 0.5 * (a + b);
  const double lm = sample(f, 0.5 * (a + m));
  const double rm = sample(f, 0.5 * (m + b));
  const double left = simpson(fa, lm, fm, m - a);
  const double right = simpson(fm, rm, fb, b - m);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) {
    out.value += left + right + diff / 15.0;
    out.error_estimate += std::abs(diff) / 15.0 + 1e-300;
    return;
  }
  adapt(f, a, m, fa, lm, fm, left, 0.5 * tol, depth - 1, out);
  adapt(f, m, b, fm, rm, fb, right, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadResult quadrature(const std::function<double(double)>& f, double a, double b,
                      int initial_intervals) {
  if (initial_intervals < 2)
    throw Error("InvalidIntervals", "quadrature oracle needs n >= 2");
  QuadResult out;
  const int pieces = std::max(2, initial_intervals / 64);
  for (int k = 0; k < pieces; ++k) {
    const double x0 = a + (b - a) * k / pieces;
    const double x1 = a + (b - a) * (k + 1) / pieces;
    const double xm = 0.5 * (x0 + x1);
    const double f0 = sample(f, x0), fm = sample(f, xm), f1 = sample(f, x1);
    adapt(f, x0, x1, f0, fm, f1, simpson(f0, fm, f1, x1 - x0), 1e-12, 30, out);
  }
  return out;
}

}  // namespace grafock::oracles
