#include <iostream>

#include "commlie/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return commlie::run_cli(args, std::cout, std::cerr);
}
