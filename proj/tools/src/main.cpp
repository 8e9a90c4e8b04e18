#include <iostream>
#include <string>
#include <vector>

#include "eikq_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eikq::cli::run(args, {std::cin, std::cout, std::cerr, eikq::cli::color_enabled()});
}
