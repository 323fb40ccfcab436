#include <iostream>
#include <vector>

#include "harmonic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return harmonic::runCli(args, std::cout, std::cerr);
}
