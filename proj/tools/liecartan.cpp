#include <iostream>

#include "liecartan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liecartan::run_cli(args, std::cout, std::cerr);
}
