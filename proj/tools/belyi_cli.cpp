#include <iostream>
#include <string>
#include <vector>

#include "belyi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto r = belyi::cli::run(args);
  std::cout << r.out;
  return r.exit_code;
}
