#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eikq::cli {

enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,
  kUsage = 2,
  kInconclusive = 3,
  kIoError = 4,
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool color = false;
};

/// Runs one eikq command. `args` excludes the program name.
int run(const std::vector<std::string>& args, Streams streams);

/// True unless EIKQ_COLOR=0 is set or stdout is not a terminal.
bool color_enabled();

}  // namespace eikq::cli
