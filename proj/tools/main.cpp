#include <iostream>
#include <string>
#include <vector>

#include "flowvol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flowvol::cli::run(args, std::cout, std::cerr);
}
