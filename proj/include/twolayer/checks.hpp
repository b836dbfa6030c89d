// Named property suites shared by the verify command and the acceptance run.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twolayer/core.hpp"

namespace twolayer::checks {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass;
  double value;   // measured worst case
  double bound;   // the tolerance it is held to
  std::string detail;
  bool info = false;  // reported only, never fails
};

struct SuiteOptions {
  std::uint64_t seed = 2024;
  QuadSpec quad{};
};

// collapse, branch, factorization, f2f3, pde, methods, rates, representation, gradients
const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace twolayer::checks
