// Acceptance gate: runs every criterion of the verification suite and
// prints one pass/fail line each. Exits nonzero if any criterion fails.

#include "sidem/paper_suite.hpp"

#include <cstdio>

int main() {
  const auto results = sidem::run_paper_suite();
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%2d/12] %s  %-66s (%.3f s, budget %.0f s)\n", r.id,
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.budget_seconds);
    if (!r.pass) {
      std::printf("        %s\n", r.detail.c_str());
      all = false;
    }
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed"
                          : "acceptance: FAILURES PRESENT");
  return all ? 0 : 1;
}
