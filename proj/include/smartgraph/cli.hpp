/**
 * @file cli.hpp
 * @brief `smartgraph analyze` driver: parse, graph, detect, report.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smartgraph {

/// Exit codes: 0 clean, 1 findings per --fail-on, 2 input or configuration error.
inline constexpr int kExitClean = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitError = 2;

/**
 * Runs the command line `args` (without the program name). Reports go to
 * `out` unless --out is given; diagnostics and errors go to `err`.
 * `color_capable` says whether `out` is a terminal; colors are still
 * suppressed by --no-color or the NO_COLOR environment variable.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color_capable = false);

}  // namespace smartgraph
