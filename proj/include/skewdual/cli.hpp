#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewdual::cli {

enum ExitCode : int { ok = 0, failure = 1, invalid = 2, none_exist = 3 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewdual::cli
