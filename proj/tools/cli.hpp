#pragma once

#include <ostream>

namespace hwg::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kIoError = 3 };

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hwg::cli
