#pragma once

#include <iosfwd>

namespace qaens::cli {

// Exit status table.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidFiles = 1;  // `validate` found problems
inline constexpr int kExitUsage = 2;         // bad flags or arguments
inline constexpr int kExitIo = 3;            // unreadable / unwritable file
inline constexpr int kExitFormat = 4;        // parse or schema error, unknown/duplicate ids
inline constexpr int kExitData = 5;          // any other data contract violation

/// Runs one subcommand. Results go to `out`; errors and progress records go
/// to `err` as one JSON object per line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qaens::cli
