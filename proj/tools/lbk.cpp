#include <iostream>
#include <string>
#include <vector>

#include "lbk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lbk::run_cli(args, std::cout, std::cerr);
}
