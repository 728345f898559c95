#pragma once

#include <ostream>

namespace wehrhart::cli {

/// Entry point of the `wehrhart` tool. Exit codes: 0 success, 1 failed
/// checks, 2 parse/usage errors, 3 validation errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wehrhart::cli
