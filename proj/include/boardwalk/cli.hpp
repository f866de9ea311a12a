#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boardwalk::cli {

/// Exit statuses of the `boardwalk` command.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,     // harness or input trouble outside the categories below
  kUsage = 2,
  kGameError = 3,   // unknown game, unreadable or malformed trace
  kCompliance = 4,  // candidate report has flags
  kCrash = 5,       // candidate never completed a playthrough
};

/// Runs one `boardwalk` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace boardwalk::cli
