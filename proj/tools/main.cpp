#include <iostream>
#include <string>
#include <vector>

#include "hbarkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hbarkit::run_command(args, std::cout, std::cerr);
}
