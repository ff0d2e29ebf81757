// Command line front end; tools/main.cpp forwards argv here.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricjl::cli {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitRefused = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricjl::cli
