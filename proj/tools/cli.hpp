#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace armine::cli {

/// Parses flags, runs the report, returns the process exit code.
/// `args` excludes the program name.
int main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace armine::cli
