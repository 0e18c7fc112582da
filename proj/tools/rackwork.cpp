#include <iostream>
#include <string>
#include <vector>

#include "rackwork/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rackwork::cli::run(args, std::cout, std::cerr);
}
