#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specbound::cli {

// Exit codes: 0 success with no violations, 1 violations reported, 2 usage or
// input error. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace specbound::cli
