#include <iostream>
#include <string>
#include <vector>

#include "bondlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bondlab::cli::run(args, std::cin, std::cout, std::cerr);
}
