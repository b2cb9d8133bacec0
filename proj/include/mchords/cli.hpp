#pragma once

// The `mchords` command-line front end. Exit codes: 0 success or property
// holds, 1 property violated (a witness is printed), 2 input or usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace mchords {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// argv without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mchords
