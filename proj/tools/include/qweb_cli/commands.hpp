// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.
//
// The `qweb` subcommands as a function, so tests can drive them without a
// process.  Exit status: 0 success, 1 domain error or a failed check, 2
// usage error.  Errors are reported as JSON on the error stream.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qweb::cli {

struct CommandResult {
  int status = 0;
  std::string out;
  std::string err;
};

// args excludes the program name: {"dim", "--source", "2", ...}.  An
// expression argument "-" is read from `in`.
CommandResult run_command(const std::vector<std::string>& args, std::istream& in);
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace qweb::cli
