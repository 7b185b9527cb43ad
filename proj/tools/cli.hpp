#pragma once

#include <iosfwd>

namespace heavytail::cli {

/// Entry point of the `heavytail` command. Returns the process exit code:
/// 0 on success, 1 when every replication was undefined, 2 on argument errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heavytail::cli
