#include <iostream>
#include <string>
#include <vector>

#include "twistfuse/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return twistfuse::cli::run_command(args, std::cout, std::cerr);
}
