#include <iostream>
#include <vector>

#include "b4cat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return b4cat::run_cli(std::move(args), std::cout, std::cerr);
}
