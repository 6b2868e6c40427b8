#include <iostream>

#include "finsler/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return finsler::cli::run(args, std::cout, std::cerr);
}
