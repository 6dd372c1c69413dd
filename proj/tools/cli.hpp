#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace excol::cli {

// Runs one command line (without the program name) and returns the exit
// status: 0 success, 1 validation or engine failure, 2 usage, I/O or format
// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Input lookup: the path itself, path + ".json", then the fixture directory.
std::string resolve_input(const std::string& input);

std::string fixture_dir();

}  // namespace excol::cli
