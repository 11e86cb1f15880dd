#include <iostream>
#include <vector>

#include "flipcut/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flipcut::cli::run(args, std::cin, std::cout, std::cerr);
}
