#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skl::cli {

// Parses and executes one command line (without argv[0]). Writes the JSON
// document to out and diagnostics to err. Exit status: 0 success, 1 usage or
// input error, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skl::cli
