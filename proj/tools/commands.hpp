#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace twistcert::cli {

// Exit-code contract of every subcommand.
enum ExitCode : int { kSuccess = 0, kNotCertified = 1, kPrecision = 2, kInput = 3 };

int exit_code_for(const std::exception& e);

// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twistcert::cli
