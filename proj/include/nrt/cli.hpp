#pragma once

// Command-line front end. Exit codes: 0 pass, 1 verified false, 2 usage or parse error.

#include <ostream>

namespace nrt {

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nrt
