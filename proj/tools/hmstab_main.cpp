#include <iostream>
#include <string>
#include <vector>

#include "hmstab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hmstab::run_cli(args, std::cout, std::cerr);
}
