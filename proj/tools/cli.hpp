#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvp::cli {

// Exit codes: 0 success, 1 parse/domain/usage error, 2 hash mismatch.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mvp::cli
