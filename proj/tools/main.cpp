#include <iostream>
#include <string>
#include <vector>

#include "sigmabrauer/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sb::cli::run(args, std::cout, std::cerr);
}
