// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "twobridge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return twobridge::cli::execute(args, std::cout, std::cerr);
}
