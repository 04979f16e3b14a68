// cli.hpp — Command-line driver; every subcommand writes a rerun manifest.
#pragma once

namespace rolesim::cli {

// Parses argv and dispatches to one subcommand. Returns the process exit
// status: 0 on success, 1 on any error (with a one-line diagnostic on stderr)
// and for failed verification commands.
int run(int argc, const char* const* argv);

}  // namespace rolesim::cli
