#pragma once

namespace grafock {

// Process-wide algebra knobs. Set once at startup (CLI flags / config file);
// concurrent mutation is not supported, concurrent reads are.
struct AlgebraConfig {
  // Largest usable generator id. Indices are stored in one 64-bit word, so
  // this is capped at 64.
  int g_max = 64;
  // Coefficients with magnitude strictly below this are dropped after every
  // operation. 0 keeps storage exact (only exact zeros are removed).
  double prune_threshold = 0.0;
  // |body| at or below this is treated as vanishing when inverting.
  double invert_epsilon = 1e-12;
};

AlgebraConfig& algebra_config();

}  // namespace grafock
