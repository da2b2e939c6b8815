#pragma once

#include "polyinc/cli/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polyinc::cli {

/// Canonical experiment names: fit, flecnode, ruled-cert, joints, gk4, szt,
/// motion-lines, distances, degree-reduce, partition, pk. "census" and
/// "quadruples" are accepted as aliases of gk4 and distances.
std::vector<std::string> experiment_names();

/// Resolves aliases; throws std::invalid_argument for unknown names.
std::string canonical_experiment(const std::string& name);

/// Runs one experiment. Inline data uses the file record layout: "points"
/// and "lines" arrays as in the point/line files. Throws
/// std::invalid_argument for bad parameters or exceeded caps; the message
/// names the cap.
Report run_experiment(const std::string& name, const Json& params, std::uint64_t seed);

}  // namespace polyinc::cli
