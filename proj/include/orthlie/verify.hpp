#pragma once

#include "orthlie/types.hpp"

#include <string>
#include <vector>

namespace orthlie::verify {

// outcome of one property check over its stated population.  residuals are
// normalized by each instance's own bound, so pass == (max_residual <=
// threshold) with threshold 1 for population checks
struct PropertyResult {
  std::string name;
  int population = 0;
  double max_residual = 0.0;
  double threshold = 1.0;
  bool pass = false;
  std::string note;
};

// the thirteen gate checks, in their canonical order
std::vector<PropertyResult> run_acceptance(const ToleranceProfile& tol = {});

// named subsets: all, derivation, duality, riesz, ideals, geometry
std::vector<PropertyResult> run_suite(const std::string& suite,
                                      const ToleranceProfile& tol = {});

const std::vector<std::string>& suite_names();

}  // namespace orthlie::verify
