#include "grafock/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "grafock/errors.hpp"

namespace grafock::quad {

namespace {

// Newton iteration on the Legendre polynomial, symmetric halves shared.
Rule compute_rule(int order) {
  Rule rule;
  rule.x.resize(order);
  rule.w.resize(order);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[i] = -x;
    rule.x[order - 1 - i] = x;
    rule.w[i] = rule.w[order - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return rule;
}

}  // namespace

const Rule& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

namespace {

void append_panel(Grid& g, double a, double b, const Rule& rule) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    g.nodes.push_back(c + h * rule.x[i]);
    g.weights.push_back(h * rule.w[i]);
  }
}

}  // namespace

Grid uniform_grid(double a, double b, int panels, int order) {
  const Rule& rule = gauss_legendre(order);
  Grid g;
  g.nodes.reserve(static_cast<std::size_t>(panels) * order);
  g.weights.reserve(static_cast<std::size_t>(panels) * order);
  for (int i = 0; i < panels; ++i) {
    const double x0 = a + (b - a) * i / panels;
    const double x1 = a + (b - a) * (i + 1) / panels;
    append_panel(g, x0, x1, rule);
  }
  return g;
}

void append_graded_panels(Grid& out, double a, double b, double ratio, int order) {
  const Rule& rule = gauss_legendre(order);
  double hi = b;
  while (hi > a) {
    const double lo = std::max(a, hi / ratio);
    append_panel(out, lo, hi, rule);
    hi = lo;
  }
}

double integrate(const Grid& grid, const std::function<double(double)>& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) s += grid.weights[i] * f(grid.nodes[i]);
  return s;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int order) {
  return integrate(uniform_grid(a, b, panels, order), f);
}

namespace {

double panel_value(const std::function<double(double)>& f, double a, double b,
                   const Rule& rule) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    const double v = f(c + h * rule.x[i]);
    if (!std::isfinite(v)) throw NonFinite("integrand returned a non-finite value");
    s += rule.w[i] * v;
  }
  return h * s;
}

double adaptive_step(const std::function<double(double)>& f, double a, double b,
                     double whole, double tol, int depth, const Rule& rule) {
  const double mid = 0.5 * (a + b);
  const double left = panel_value(f, a, mid, rule);
  const double right = panel_value(f, mid, b, rule);
  if (depth <= 0 || std::abs(left + right - whole) <= tol) return left + right;
  return adaptive_step(f, a, mid, left, 0.5 * tol, depth - 1, rule) +
         adaptive_step(f, mid, b, right, 0.5 * tol, depth - 1, rule);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
  const Rule& rule = gauss_legendre(16);
  return adaptive_step(f, a, b, panel_value(f, a, b, rule), abs_tol, max_depth, rule);
}

}  // namespace grafock::quad
