#include <iostream>
#include <string>
#include <vector>

#include "sl2sym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sl2sym::run_cli(args, std::cout, std::cerr);
}
