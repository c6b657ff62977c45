#pragma once

#include <iosfwd>

namespace vanishlab::cli {

/// Exit statuses of the command-line front end.
enum Exit : int {
  kConfirmed = 0,     ///< confirmed, consistent, or a plain successful computation
  kFailed = 1,        ///< hypothesis or check failed; a residual is reported
  kInconclusive = 2,  ///< nothing decided within the horizon
  kUsage = 3,         ///< usage, parse, or domain error
};

/// Runs one invocation. argv[0] is the program name. Polynomial arguments
/// given as "-" are read from `in`.
int dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace vanishlab::cli
