// Acceptance battery: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "wmod/suite.hpp"

int main() {
  const auto results = wmod::run_acceptance_suite();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("%s  %2d. %s: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed"
                          : "acceptance: FAILED");
  return all ? 0 : 1;
}
