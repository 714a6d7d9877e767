#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace grafock {

// Orthonormal Hermite function xi_n(x) = (2^n n! sqrt(pi))^(-1/2) H_n(x)
// e^(-x^2/2), evaluated by the normalized two-term recurrence
//   xi_{n+1} = sqrt(2/(n+1)) x xi_n - sqrt(n/(n+1)) xi_{n-1}.
double hermite_xi(int n, double x);

// Streams rows xi_n over a fixed set of points, n = 0, 1, 2, ... Each state
// carries a binary exponent so the recurrence survives the e^(-x^2/2) start
// underflowing for |x| beyond ~38 (needed when the grid half-width exceeds
// the classical turning point of low orders).
class HermiteRowStream {
 public:
  explicit HermiteRowStream(std::span<const double> points);

  int order() const { return n_; }           // order of row()
  const std::vector<double>& row() const { return row_; }
  void advance();                            // move to order + 1

 private:
  void materialize();
  std::vector<double> points_;
  std::vector<double> prev_, cur_;  // scaled xi_{n-1}, xi_n
  std::vector<int> exp2_;           // true value = cur_ * 2^exp2_
  std::vector<double> row_;
  int n_ = 0;
};

}  // namespace grafock
