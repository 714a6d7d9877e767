#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grafock::properties {

struct InvariantResult {
  std::string name;
  long long samples = 0;
  double worst = 0.0;      // worst observed deviation / violation
  double tolerance = 0.0;  // pass iff worst <= tolerance
  bool pass = false;
  double margin() const { return tolerance - worst; }
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  long long samples = 10000;
  double lambda = 1.0;  // weight growth rate for the vage suite
};

std::vector<InvariantResult> run_algebra_suite(const SuiteOptions&);
std::vector<InvariantResult> run_conjugation_suite(const SuiteOptions&);
std::vector<InvariantResult> run_norm_suite(const SuiteOptions&);
std::vector<InvariantResult> run_vage_suite(const SuiteOptions&);
std::vector<InvariantResult> run_operator_suite(const SuiteOptions&);
std::vector<InvariantResult> run_suite(const std::string& name, const SuiteOptions&);

inline bool all_pass(const std::vector<InvariantResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace grafock::properties
