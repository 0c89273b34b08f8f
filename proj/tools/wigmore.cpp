#include <iostream>
#include <string>
#include <vector>

#include "wigmore/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return wigmore::run_cli(args, std::cout, std::cerr);
}
