#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace mellinsphere::cli {

/// Runs one command line (args[0] is the program name).
///
/// Returns 0 on success, 2 on a usage error and 1 when a computation fails;
/// failures print a single diagnostic line to `err`. CSV output goes to
/// `out` unless --out names a file.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace mellinsphere::cli
