#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tsharp/classes.hpp"

namespace tsharp::cli {

enum ExitCode : int {
  kPass = 0,
  kViolation = 1,
  kInapplicable = 2,
  kUsage = 64,
  kDataError = 65,
  kIoError = 66,
};

// "name", "name:1,-1" or "name:A=1,B=-1".
MindaGenerator parse_phi(std::string_view text, std::size_t order = kDefaultOrder);

// Runs one command line (argv[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tsharp::cli
