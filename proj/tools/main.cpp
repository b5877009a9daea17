#include <iostream>
#include <vector>

#include "polyns/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyns::cli_main(args, std::cout, std::cerr);
}
