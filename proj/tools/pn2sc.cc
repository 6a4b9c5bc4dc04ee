#include <iostream>
#include <string>
#include <vector>

#include "pn2sc/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pn2sc::run_cli(args, std::cout, std::cerr);
}
