// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.

#include <iostream>
#include <string>
#include <vector>

#include "qweb_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto res = qweb::cli::run_command(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.status;
}
