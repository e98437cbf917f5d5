#include <iostream>
#include <string>
#include <vector>

#include "idealpow/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return idealpow::cli::run_cli(args, std::cout, std::cerr);
}
