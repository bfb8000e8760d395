#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schar {

/// Entry point of the command line tool.  `args` holds the arguments
/// without the program name.  Reports go to `out`, diagnostics to `err`.
///
/// Returns the process exit code: 0 on success, 1 on invalid input (an
/// unreadable or inconsistent table, fusion map, or request), 2 when an
/// enumeration aborts on the --limit guard.  Argument errors (unknown
/// flag, missing subcommand) return the parser's own nonzero codes.
///
/// Table arguments are used as given when the file exists; otherwise they
/// are resolved against the directory in the SCHAR_CORPUS_DIR environment
/// variable, with and without a ".json" suffix.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace schar
