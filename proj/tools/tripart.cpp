#include <iostream>
#include <string>
#include <vector>

#include "tripart/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return tripart::run_cli(args, std::cout, std::cerr);
}
