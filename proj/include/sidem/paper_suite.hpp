#pragma once

/**
 * @file paper_suite.hpp
 * @brief The verification suite: every headline claim about S-idempotents
 *        in Z2[Cn] and in characteristic-0 group algebras, checked with
 *        exact arithmetic and a wall-clock budget per criterion.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace sidem {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;          // first failure, or a one-line summary
  double seconds = 0.0;        // measured
  double budget_seconds = 0.0; // enforced: exceeding it fails the criterion
};

/// Runs all twelve criteria in order. The seed drives the randomized
/// unique-square-root sampling; everything else is deterministic.
std::vector<CriterionResult> run_paper_suite(std::uint64_t seed = 20260808);

}  // namespace sidem
