#pragma once

#include <functional>
#include <vector>

namespace grafock::quad {

// Gauss-Legendre rule on [-1, 1], nodes/weights computed once per order.
struct Rule {
  std::vector<double> x, w;
};

const Rule& gauss_legendre(int order);

// A flattened composite grid: absolute nodes with their weights.
struct Grid {
  std::vector<double> nodes, weights;
  std::size_t size() const { return nodes.size(); }
};

// Uniform panels over [a, b].
Grid uniform_grid(double a, double b, int panels, int order = 16);

// Panels shrinking geometrically from b down to a (a > 0), then appended to
// `out`; used to resolve integrable endpoint singularities at 0.
void append_graded_panels(Grid& out, double a, double b, double ratio, int order = 16);

double integrate(const Grid& grid, const std::function<double(double)>& f);

// Composite fixed-panel integration.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int order = 16);

// Bisection-adaptive Gauss-Legendre; throws NonFinite on non-finite samples.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-10, int max_depth = 24);

}  // namespace grafock::quad
