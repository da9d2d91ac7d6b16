#ifndef WMOD_SUITE_HPP
#define WMOD_SUITE_HPP

#include <string>
#include <vector>

namespace wmod {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // governing numbers, one line
};

/// The fixed acceptance battery: twelve independent criteria covering the
/// defining relations, weight structure, deformation consistency, branching,
/// unitarity, norm boundedness, the global action, sphere integrals, the
/// finite family, growth, the classification tables, and finite-type checks.
/// Tolerances and parameter grids are pinned here.
std::vector<CriterionResult> run_acceptance_suite();

}  // namespace wmod

#endif
