#include <iostream>
#include <vector>

#include "deformlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return deformlab::cli::run(args, std::cout, std::cerr);
}
