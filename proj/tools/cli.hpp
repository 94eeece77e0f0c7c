#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace layercake::cli {

/// Runs one command; `args` excludes the program name. Returns 0 on success,
/// 1 on a domain error and 2 on a usage or input parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Leaf command paths, e.g. "category validate".
std::vector<std::string> registry();

}  // namespace layercake::cli
