#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghgeo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Parses arguments, dispatches one subcommand and writes a single JSON
/// document to `out`. With --verbose a human-readable summary goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace ghgeo::cli
