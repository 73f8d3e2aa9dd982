#ifndef FRACBVP_PROBLEM_CONFIG_HPP
#define FRACBVP_PROBLEM_CONFIG_HPP

#include "fracbvp/problem.hpp"

#include <filesystem>

namespace fracbvp {

/// Loads a problem definition from a flat keyed text file:
///
///   [domain]            # optional, defaults to [0,1]
///   a = 0
///   b = 1
///
///   rhs = "expr"        # top-level keys, accepted anywhere
///   exact = "expr"      # optional
///
///   [[term]]            # one per operator summand
///   coefficient = "expr"
///   order = 1.5
///   exponent = 1        # optional, default 1
///
///   [[bc]]
///   location = left     # left | right
///   order = 0
///   value = -1
///
/// '#' starts a comment. Expression values may be quoted. Throws ConfigError
/// with file/line context on syntax or schema violations and on semantic
/// violations (missing rhs, boundary-condition count mismatch).
ProblemSpec load_problem_config(const std::filesystem::path& path);

} // namespace fracbvp

#endif
