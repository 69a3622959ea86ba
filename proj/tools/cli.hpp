// tools/cli.hpp: the qrpat command line, callable in-process.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qrpat::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kIo = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrpat::cli
