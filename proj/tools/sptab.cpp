#include <iostream>

#include "sptab_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sptab::cli::run(args, std::cin, std::cout, std::cerr);
}
