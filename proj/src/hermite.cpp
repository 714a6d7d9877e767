#include "grafock/hermite.hpp"

#include <cmath>
#include <numbers>

#include "grafock/errors.hpp"

namespace grafock {

namespace {

const double kXiZeroPrefactor = std::pow(std::numbers::pi, -0.25);

// Split e^(-x^2/2) into mantissa * 2^e so the start never underflows.
void seeded_start(double x, double& mantissa, int& e2) {
  const double v = -0.5 * x * x;  // natural-log scale
  if (v > -600.0) {
    mantissa = kXiZeroPrefactor * std::exp(v);
    e2 = 0;
    return;
  }
  const double l2 = v / std::numbers::ln2;
  e2 = static_cast<int>(std::floor(l2));
  mantissa = kXiZeroPrefactor * std::exp2(l2 - e2);
}

}  // namespace

double hermite_xi(int n, double x) {
  if (n < 0) throw Error("InvalidOrder", "hermite_xi requires n >= 0");
  double cur, prev = 0.0;
  int e2;
  seeded_start(x, cur, e2);
  for (int k = 0; k < n; ++k) {
    const double next =
        std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(k / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
    if (e2 < 0 && std::abs(cur) > 0x1p64) {
      const int shift = std::min(-e2, 64);
      cur = std::ldexp(cur, -shift);
      prev = std::ldexp(prev, -shift);
      e2 += shift;
    }
  }
  return e2 == 0 ? cur : std::ldexp(cur, e2);
}

HermiteRowStream::HermiteRowStream(std::span<const double> points)
    : points_(points.begin(), points.end()),
      prev_(points.size(), 0.0),
      cur_(points.size()),
      exp2_(points.size()),
      row_(points.size()) {
  for (std::size_t j = 0; j < points_.size(); ++j)
    seeded_start(points_[j], cur_[j], exp2_[j]);
  materialize();
}

void HermiteRowStream::materialize() {
  for (std::size_t j = 0; j < points_.size(); ++j)
    row_[j] = exp2_[j] == 0 ? cur_[j] : std::ldexp(cur_[j], exp2_[j]);
}

void HermiteRowStream::advance() {
  const double c1 = std::sqrt(2.0 / (n_ + 1));
  const double c2 = std::sqrt(n_ / (n_ + 1.0));
  for (std::size_t j = 0; j < points_.size(); ++j) {
    const double next = c1 * points_[j] * cur_[j] - c2 * prev_[j];
    prev_[j] = cur_[j];
    cur_[j] = next;
    if (exp2_[j] < 0 && std::abs(next) > 0x1p64) {
      const int shift = std::min(-exp2_[j], 64);
      cur_[j] = std::ldexp(cur_[j], -shift);
      prev_[j] = std::ldexp(prev_[j], -shift);
      exp2_[j] += shift;
    }
  }
  ++n_;
  materialize();
}

}  // namespace grafock
