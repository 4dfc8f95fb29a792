#include <iostream>
#include <string>
#include <vector>

#include "ctreals/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ctreals::cli::run(args, std::cout, std::cerr);
}
