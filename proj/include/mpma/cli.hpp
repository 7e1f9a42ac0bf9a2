#pragma once

#include <iosfwd>

namespace mpma {

// Exit codes: 0 ok, 1 data error, 2 algorithmic assertion, 64 usage error.
enum ExitCode { kOk = 0, kDataError = 1, kAlgorithmError = 2, kUsage = 64 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mpma
