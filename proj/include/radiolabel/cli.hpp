#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radiolabel::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kInconclusive = 3,
};

// Runs one `radiolabel` invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace radiolabel::cli
