#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquepile::cli {

/// Entry point shared by the executable and the tests. Returns the exit status.
/// Commands: example | poly | verify | enumerate | graph-info.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliquepile::cli
