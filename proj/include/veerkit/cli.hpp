#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace veerkit::cli {

// Exit codes: 0 success, 1 domain error, 2 malformed input or usage, 3 internal error.
// Output (including error records) goes to `out` as JSON unless --format table.
int run(const std::vector<std::string>& args, std::ostream& out);
int run(int argc, const char* const* argv, std::ostream& out);

}  // namespace veerkit::cli
