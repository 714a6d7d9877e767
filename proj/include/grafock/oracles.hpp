#pragma once

#include <functional>
#include <vector>

#include "grafock/multi_index.hpp"

namespace grafock::oracles {

// Reference implementations for tests and verification runs. Deliberately
// slow and simple, sharing nothing with the production paths beyond the
// public index types.

// A raw generator sequence: possibly unsorted, possibly with repeats.
struct SeqIndex {
  std::vector<int> gens;
};

// Bubble-sorts the sequence counting adjacent swaps; duplicates annihilate.
SignedIndex naive_sign_sort(const SeqIndex& s);

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Adaptive Simpson with a running error estimate. Throws NonFinite when the
// integrand produces a non-finite sample.
QuadResult quadrature(const std::function<double(double)>& f, double a, double b,
                      int initial_intervals);

}  // namespace grafock::oracles
