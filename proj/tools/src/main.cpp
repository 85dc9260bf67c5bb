#include <iostream>

#include "toricfan_cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toricfan::cli::run(args, std::cin, std::cout, std::cerr);
}
