#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end. Exit codes: 0 success with all checks
 *        passing, 1 usage error or infeasible size, 2 a mathematical check
 *        failed.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace sidem::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sidem::cli
