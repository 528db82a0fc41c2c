#pragma once

#include <ostream>

namespace ammann::cli {

/// Exit codes: 0 success, 1 verification failure or domain error,
/// 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ammann::cli
