// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "ordcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = ordcalc::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
