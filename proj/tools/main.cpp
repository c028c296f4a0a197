#include <iostream>
#include <string>
#include <vector>

#include "ultrauniform/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ultrauniform::cli::run(args, std::cin, std::cout, std::cerr);
}
