#include <iostream>
#include <string>
#include <vector>

#include "hrht/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hrht::run_cli(args, std::cout, std::cerr);
}
