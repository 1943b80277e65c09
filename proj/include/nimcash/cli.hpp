// Command-line front end. Kept separate from main() so tests can drive it
// in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nimcash {

/// `args` excludes the program name. Returns the process exit status:
/// 0 on success, 1 for a nonempty sweep report or a runtime failure, 2 for
/// usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nimcash
